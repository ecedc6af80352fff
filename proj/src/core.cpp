/*
   Copyright 2026 The polarcore Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include "polarcore/core.hpp"

#include "polarcore/error.hpp"

namespace polarcore {

std::string_view to_string(CoreVerdict v) {
  switch (v) {
    case CoreVerdict::complete_core: return "complete_core";
    case CoreVerdict::graph_is_core: return "graph_is_core";
    case CoreVerdict::undecided: return "undecided";
  }
  return "?";
}

std::optional<std::string> applicable_construction(QuadricKind kind, std::size_t n, const Field& F) {
  const bool kantor = F.p() % 3 == 2 && F.k() % 2 == 1 && F.eta(F.neg(F.one())) < 0 && F.eta(F.from_int(3)) > 0;
  if (kind == QuadricKind::hyperbolic && n == 4) return "primer0";
  if (kind == QuadricKind::parabolic && n == 5 && F.p() == 3) return "primer1";
  if (kind == QuadricKind::hyperbolic && n == 6 && F.p() == 3) return "primer2";
  if (kind == QuadricKind::hyperbolic && n == 6 && kantor) return "primer3";
  return std::nullopt;
}

std::vector<Vec> transported_construction(const SymForm& S, std::string_view name) {
  const Field& F = S.field();
  const Construction c = construction(name, F);
  // Tᵀ A_S T = λ A_c, so x -> T x keeps Q(x - y) != 0.
  const Congruence tr = congruence_transport(S, c.form);
  std::vector<Vec> out;
  out.reserve(c.points.size());
  for (const auto& p : c.points) out.push_back(mul(F, tr.T, p));
  return out;
}

CoreReport core_verdict(const SymForm& S, const CoreEffort& effort) {
  const Field& F = S.field();
  const AffineGraph G = make_affine_graph(S);
  const auto n = static_cast<unsigned>(S.n());
  CoreReport R;
  R.vertex_count = G.vertex_count();
  R.omega = ipow(F.q(), G.cls.witt_index);
  const std::uint64_t full = R.vertex_count / R.omega;
  R.alpha_upper = R.vertex_count;
  R.ovoid_implication = G.cls.kind != QuadricKind::elliptic && G.cls.witt_index >= 2;

  if (G.connection_set_size > 0) {
    R.hoffman = hoffman_alpha_bound(spectrum_closed_form(G.cls.kind, n, F.q()));
    R.alpha_upper = static_cast<std::uint64_t>(R.hoffman.floor());
  }
  if (R.omega <= 100'000) {
    auto k = max_clique(G);
    if (!k.verified) throw Error(ErrorCode::VerificationFailed, "maximum clique failed verification");
    R.clique = std::move(k.vertices);
  }

  if (G.cls.kind == QuadricKind::elliptic && n >= 4) {
    // ω·α < |V| follows from the strict Hoffman inequality.
    const __int128 lhs = static_cast<__int128>(R.omega) * R.hoffman.num;
    R.strict_hoffman = lhs < static_cast<__int128>(R.vertex_count) * R.hoffman.den;
    R.verdict = CoreVerdict::graph_is_core;
    R.evidence = "elliptic spectrum";
  }

  if (effort.use_constructions && G.cls.kind != QuadricKind::elliptic) {
    if (auto name = applicable_construction(G.cls.kind, n, F)) {
      const std::uint64_t pairs = full * (full - 1) / 2;
      if (pairs <= effort.pair_budget) {
        auto cert = certify(G, SetKind::independent, transported_construction(S, *name));
        if (cert.verified && cert.vertices.size() == full) {
          R.independent = std::move(cert.vertices);
          R.alpha_lower = R.alpha_upper = full;
          R.alpha_exact = true;
          R.evidence = *name;
        }
      }
    }
  }

  if (!R.alpha_exact && R.vertex_count <= effort.vertex_budget) {
    SearchOptions opt = effort.search;
    if (R.verdict != CoreVerdict::graph_is_core) opt.stop_at = static_cast<std::size_t>(full);
    const auto cert = exact_mis(G, opt, effort.vertex_budget);
    if (!cert.verified) throw Error(ErrorCode::VerificationFailed, "independent set failed verification");
    R.alpha_lower = cert.vertices.size();
    R.alpha_upper = std::min<std::uint64_t>(R.alpha_upper, cert.upper_bound);
    // Reaching |V|/ω is optimal since ω·α <= |V| always.
    R.alpha_exact = cert.optimal || R.alpha_lower == full;
    if (R.alpha_exact) R.alpha_upper = R.alpha_lower;
    R.independent = cert.vertices;
    if (R.evidence.empty()) R.evidence = "exact_mis";
  }

  R.product_equality = R.alpha_lower == full;
  if (R.product_equality) {
    R.verdict = CoreVerdict::complete_core;
  } else if (R.alpha_upper < full) {
    R.verdict = CoreVerdict::graph_is_core;
  }
  return R;
}

}  // namespace polarcore
