#include "gridtop/morse.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "gridtop/cutgen.hpp"
#include "gridtop/error.hpp"
#include "gridtop/families.hpp"

namespace gridtop {

namespace {

auto flat_faces(const SimplicialComplex& k, EnumerationLimits limits) -> std::vector<Face> {
  std::vector<Face> out;
  for (const auto& level : all_faces_by_dim(k, limits)) out.insert(out.end(), level.begin(), level.end());
  std::sort(out.begin(), out.end());
  return out;
}

auto contains(const std::vector<Face>& sorted, Face f) -> bool {
  return std::binary_search(sorted.begin(), sorted.end(), f);
}

}  // namespace

auto MatchingReport::critical_count() const -> std::size_t {
  std::size_t n = 0;
  for (const auto& level : critical) n += level.size();
  return n;
}

auto MatchingReport::critical_in_dim(int d) const -> std::size_t {
  return d + 1 >= 0 && d + 1 < static_cast<int>(critical.size()) ? critical[d + 1].size() : 0;
}

auto MatchingReport::critical_euler() const -> long long {
  long long chi = 0;
  for (std::size_t s = 0; s < critical.size(); ++s) chi += (s % 2 == 0 ? -1 : 1) * static_cast<long long>(critical[s].size());
  return chi;
}

auto element_matching_step(const std::vector<Face>& remaining, int v) -> StepResult {
  StepResult out;
  std::unordered_set<Face> touched;
  for (Face f : remaining) {
    if (f.contains(v)) continue;
    const Face up = f.with(v);
    if (contains(remaining, up)) {
      out.pairs.push_back({f, up});
      touched.insert(f);
      touched.insert(up);
    }
  }
  for (Face f : remaining) {
    if (!touched.contains(f)) out.remaining.push_back(f);
  }
  return out;
}

auto sequence_matching(const SimplicialComplex& k, const std::vector<int>& vertices, EnumerationLimits limits)
    -> PartialMatching {
  PartialMatching m;
  std::vector<Face> remaining = flat_faces(k, limits);
  for (int v : vertices) {
    if (v < 0 || v >= k.universe_size()) throw DomainError("matching vertex outside the universe");
    auto step = element_matching_step(remaining, v);
    m.pairs.insert(m.pairs.end(), step.pairs.begin(), step.pairs.end());
    remaining = std::move(step.remaining);
  }
  return m;
}

void validate_matching(const SimplicialComplex& k, const PartialMatching& m, EnumerationLimits limits) {
  const auto faces = flat_faces(k, limits);
  std::unordered_set<Face> used;
  for (const auto& [lower, upper] : m.pairs) {
    if (!upper.contains(lower) || upper.size() != lower.size() + 1) throw DomainError("matched pair is not a cover relation");
    if (!contains(faces, lower) || !contains(faces, upper)) throw DomainError("matched pair is not in the complex");
    if (!used.insert(lower).second || !used.insert(upper).second) throw DomainError("face matched twice");
  }
}

auto check_acyclic(const SimplicialComplex& k, const PartialMatching& m, EnumerationLimits limits) -> bool {
  validate_matching(k, m, limits);
  std::unordered_map<Face, Face> up;
  for (const auto& p : m.pairs) up.emplace(p.lower, p.upper);

  std::unordered_map<Face, int> state;
  for (const auto& start : m.pairs) {
    if (state[start.lower] != 0) continue;
    std::vector<std::pair<Face, std::vector<Face>>> stack;
    auto successors = [&up](Face a) {
      std::vector<Face> next;
      const Face b = up.at(a);
      for (int w : b) {
        const Face c = b.without(w);
        if (c != a && up.contains(c)) next.push_back(c);
      }
      return next;
    };
    state[start.lower] = 1;
    stack.emplace_back(start.lower, successors(start.lower));
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next.empty()) {
        state[node] = 2;
        stack.pop_back();
        continue;
      }
      const Face c = next.back();
      next.pop_back();
      const int s = state[c];
      if (s == 1) return false;
      if (s == 0) {
        state[c] = 1;
        stack.emplace_back(c, successors(c));
      }
    }
  }
  return true;
}

auto matching_report(const SimplicialComplex& k, const PartialMatching& m, EnumerationLimits limits)
    -> MatchingReport {
  MatchingReport r;
  r.acyclic = check_acyclic(k, m, limits);
  std::unordered_set<Face> matched;
  for (const auto& p : m.pairs) {
    matched.insert(p.lower);
    matched.insert(p.upper);
  }
  r.empty_face_matched = matched.contains(Face{});
  for (const auto& level : all_faces_by_dim(k, limits)) {
    std::vector<Face> crit;
    for (Face f : level) {
      if (!matched.contains(f)) crit.push_back(f);
    }
    r.critical.push_back(std::move(crit));
  }
  return r;
}

auto morse_wedge_verdict(const MatchingReport& r) -> std::optional<WedgeProfile> {
  if (!r.acyclic) throw DomainError("morse_wedge_verdict needs an acyclic matching");
  std::optional<WedgeProfile> out = WedgeProfile{};
  for (std::size_t s = 0; s < r.critical.size(); ++s) {
    if (r.critical[s].empty()) continue;
    if (out->dim) return std::nullopt;
    out = WedgeProfile{static_cast<long long>(r.critical[s].size()), static_cast<int>(s) - 1};
  }
  return out;
}

auto morse_wedge_verdict(const SimplicialComplex& k, const PartialMatching& m, EnumerationLimits limits)
    -> std::optional<WedgeProfile> {
  return morse_wedge_verdict(matching_report(k, m, limits));
}

auto weak_morse_inequalities_hold(const MatchingReport& r, const BettiProfile& b) -> bool {
  const int top = static_cast<int>(std::max(r.critical.size(), b.values.size()));
  for (int d = -1; d + 1 < top; ++d) {
    if (static_cast<long long>(r.critical_in_dim(d)) < b[d]) return false;
  }
  return true;
}

auto appendix_sequence(const Graph& g, int apex) -> std::vector<int> {
  if (!is_leaf(g, apex)) throw DomainError("appendix matching needs a leaf apex");
  std::vector<int> order{apex};
  VertexSet seen = VertexSet::single(apex);
  std::vector<int> queue{g.neighbors(apex).min()};
  seen.insert(queue.front());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int v = queue[i];
    order.push_back(v);
    for (int w : g.neighbors(v) - seen) {
      seen.insert(w);
      queue.push_back(w);
    }
  }
  for (int v : g.vertices() - seen) order.push_back(v);
  return order;
}

namespace {

auto appendix_graph(AppendixFamily family, int m) -> std::pair<Graph, int> {
  if (m < 2) throw DomainError("appendix matchings need m >= 2");
  if (family == AppendixFamily::G3xn1) {
    Graph g = make_family({FamilyTag::G3xn1, m, 0});
    const int apex = g.index_of(grid_label(2, m + 1));
    return {std::move(g), apex};
  }
  Graph g = make_family({FamilyTag::H1, m, 0});
  const int apex = g.index_of(grid_label(0, m));
  return {std::move(g), apex};
}

}  // namespace

auto appendix_total2cut_matching(AppendixFamily family, int m, const std::vector<int>& after_apex) -> AppendixRun {
  auto [g, apex] = appendix_graph(family, m);
  AppendixRun run;
  run.complex = total_cut_complex(g, 2);
  run.apex = apex;
  run.sequence.push_back(apex);
  run.sequence.insert(run.sequence.end(), after_apex.begin(), after_apex.end());

  const int nv = g.size();
  const auto first = element_matching_step(flat_faces(run.complex, {}), apex);
  for (Face f : first.remaining) {
    if (f.contains(apex)) continue;
    if (f.size() == nv - 3) ++run.type1_after_apex;
    if (f.size() == nv - 2) ++run.type2_after_apex;
  }

  run.matching = sequence_matching(run.complex, run.sequence);
  run.report = matching_report(run.complex, run.matching);
  run.type2_matched_to_type1 = true;
  std::unordered_map<Face, Face> partner;
  for (const auto& p : run.matching.pairs) partner.emplace(p.upper, p.lower);
  for (Face f : first.remaining) {
    if (f.contains(apex) || f.size() != nv - 2) continue;
    auto it = partner.find(f);
    if (it == partner.end() || it->second.contains(apex) || it->second.size() != nv - 3) {
      run.type2_matched_to_type1 = false;
    }
  }
  run.graph = std::move(g);
  return run;
}

auto appendix_total2cut_matching(AppendixFamily family, int m) -> AppendixRun {
  auto [g, apex] = appendix_graph(family, m);
  auto seq = appendix_sequence(g, apex);
  seq.erase(seq.begin());
  return appendix_total2cut_matching(family, m, seq);
}

}  // namespace gridtop
