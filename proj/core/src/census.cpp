#include "harmonica/census.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "harmonica/error.hpp"

namespace harmonica {

namespace {

// Bottom-up search of the harmonic subgroups of a finite action group.
//
// An element is "good" when it fixes no vertex together with an incident
// edge. A subgroup is harmonic iff all its elements are good and every vertex
// has a neighbour outside its orbit. Both conditions pass to subgroups, so
// each harmonic subgroup is reached from the trivial group by adjoining
// harmonic cyclic subgroups one at a time, through harmonic subgroups only.
class HarmonicSearch {
 public:
  struct Sub {
    std::vector<std::uint32_t> members;  // sorted element indices
    std::vector<std::uint32_t> gens;
  };

  explicit HarmonicSearch(const ActionGroup& group) : group_(group) {}

  void run() {
    classify_elements();
    collect_cyclic();
    std::unordered_set<std::string> seen;
    harmonic_.push_back(Sub{{0}, {}});
    seen.insert(bits_of(harmonic_.back().members));
    for (std::size_t head = 0; head < harmonic_.size(); ++head) {
      for (const Sub& c : cyclic_) {
        const std::uint32_t gen = c.gens.front();
        if (std::binary_search(harmonic_[head].members.begin(), harmonic_[head].members.end(), gen)) continue;
        auto joined = join(harmonic_[head], gen);
        if (!joined) continue;
        if (!seen.insert(bits_of(joined->members)).second) continue;
        if (escapes(*joined)) harmonic_.push_back(std::move(*joined));
        else rejected_.push_back(std::move(*joined));
      }
    }
    std::sort(harmonic_.begin(), harmonic_.end(), [](const Sub& a, const Sub& b) {
      return a.members.size() != b.members.size() ? a.members.size() < b.members.size() : a.members < b.members;
    });
  }

  const std::vector<Sub>& harmonic() const { return harmonic_; }
  const std::vector<Sub>& rejected() const { return rejected_; }
  const std::vector<Sub>& bad_cyclic() const { return bad_cyclic_; }

  ActionGroup materialize(const Sub& s) const {
    std::vector<std::size_t> idx(s.members.begin(), s.members.end());
    return group_.subgroup(idx);
  }

  // Harmonic subgroups not contained in a larger harmonic subgroup.
  std::vector<const Sub*> maximal() const {
    std::vector<const Sub*> out;
    for (std::size_t i = 0; i < harmonic_.size(); ++i) {
      bool inside = false;
      for (std::size_t j = i + 1; j < harmonic_.size() && !inside; ++j)
        inside = harmonic_[j].members.size() > harmonic_[i].members.size() &&
                 std::includes(harmonic_[j].members.begin(), harmonic_[j].members.end(),
                               harmonic_[i].members.begin(), harmonic_[i].members.end());
      if (!inside) out.push_back(&harmonic_[i]);
    }
    return out;
  }

 private:
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(group_.multiply(a, b));
  }

  std::string bits_of(const std::vector<std::uint32_t>& members) const {
    std::string s((group_.order() + 7) / 8, '\0');
    for (auto m : members) s[m / 8] = static_cast<char>(s[m / 8] | (1 << (m % 8)));
    return s;
  }

  void classify_elements() {
    const MultiGraph& g = group_.graph();
    good_.assign(group_.order(), true);
    for (std::size_t k = 1; k < group_.order(); ++k) {
      const Automorphism& a = group_.element(k);
      for (VertexId x : g.vertices()) {
        if (!a.fixes(x)) continue;
        for (EdgeId e : g.incident_edges(x))
          if (a.fixes(e)) {
            good_[k] = false;
            break;
          }
        if (!good_[k]) break;
      }
    }
  }

  void collect_cyclic() {
    std::unordered_set<std::string> seen;
    for (std::uint32_t k = 1; k < group_.order(); ++k) {
      Sub s{{0}, {k}};
      bool all_good = true;
      for (std::uint32_t p = k; p != 0; p = mul(p, k)) {
        s.members.push_back(p);
        all_good = all_good && good_[p];
      }
      std::sort(s.members.begin(), s.members.end());
      if (!seen.insert(bits_of(s.members)).second) continue;
      if (all_good && escapes(s)) cyclic_.push_back(std::move(s));
      else bad_cyclic_.push_back(std::move(s));
    }
  }

  std::optional<Sub> join(const Sub& h, std::uint32_t gen) const {
    Sub out{h.members, h.gens};
    out.gens.push_back(gen);
    std::vector<bool> in(group_.order(), false);
    for (auto m : out.members) in[m] = true;
    for (std::size_t i = 0; i < out.members.size(); ++i)
      for (auto gn : out.gens) {
        const std::uint32_t p = mul(out.members[i], gn);
        if (in[p]) continue;
        if (!good_[p]) return std::nullopt;
        in[p] = true;
        out.members.push_back(p);
      }
    std::sort(out.members.begin(), out.members.end());
    return out;
  }

  // Every vertex has a neighbour in another orbit.
  bool escapes(const Sub& s) const {
    const MultiGraph& g = group_.graph();
    std::vector<std::uint32_t> parent(g.vertex_count());
    for (std::uint32_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto gn : s.gens) {
      const Automorphism& a = group_.element(gn);
      for (VertexId v : g.vertices()) parent[find(v.index)] = find(a(v).index);
    }
    for (VertexId x : g.vertices()) {
      bool ok = false;
      for (const Adjacent& adj : g.adjacent(x))
        if (find(adj.vertex.index) != find(x.index)) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
    return true;
  }

  const ActionGroup& group_;
  std::vector<bool> good_;
  std::vector<Sub> cyclic_;
  std::vector<Sub> bad_cyclic_;
  std::vector<Sub> harmonic_;
  std::vector<Sub> rejected_;
};

std::string hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

struct GraphResult {
  CensusRecord record;
  std::vector<CensusViolation> violations;
  std::size_t pairs = 0;
  std::size_t definition_checks = 0;
};

// Checks one harmonic pair; violations are appended to `out`.
void check_pair(const ActionGroup& h, const std::string& key, GraphResult& out,
                std::optional<RamificationProfile>* keep = nullptr) {
  auto fail = [&](std::string property, std::string detail) {
    out.violations.push_back(CensusViolation{key, h.order(), std::move(property), std::move(detail)});
  };
  ++out.pairs;
  try {
    if (!is_harmonic_action(h)) {
      fail("criterion", "search produced a subgroup the criterion rejects");
      return;
    }
    const RamificationProfile p = profile(h);
    if (keep) *keep = p;
    if (!verify_riemann_hurwitz(p)) fail("riemann_hurwitz", "an RH form fails");
    const BranchCase bc = classify_branch_locus(p);
    if (p.R > Rational(2) && p.R < Rational(7, 3)) fail("r_gap", "R = " + p.R.to_string());
    if (h.order() > 1) {
      const Quotient q = quotient(h);
      const std::size_t d = degree(q.morphism);
      if (d != h.order()) fail("degree", "degree " + std::to_string(d));
    }
    (void)bc;
    if (p.genus >= 2) {
      if (!check_hurwitz_bound(p)) fail("hurwitz_bound", "|Γ| > 6(g-1)");
      if (!check_gap_theorem(p)) fail("gap_theorem", "order in (4(g-1), 6(g-1)) or bad extremal profile");
      if (!check_prime_divisor_bound(p)) fail("prime_divisors", "prime factor above g+1");
      if (!check_positive_quotient_genus_bounds(p)) fail("quotient_genus_bounds", "g' >= 1 bound fails");
      // Prime-order cyclic check: try every g1 that meets its hypotheses.
      if (is_prime(h.order()))
        for (int g1 = 2; g1 <= p.genus; ++g1) {
          const auto pp = static_cast<std::int64_t>(h.order());
          if (p.genus - 1 == pp * (g1 - 1) && pp > g1 + 1 && !check_cyclic_unramified(h, g1))
            fail("cyclic_unramified", "g1 = " + std::to_string(g1));
        }
    }
  } catch (const TheoremViolation& tv) {
    fail(std::string(to_string(tv.which())), tv.what());
  } catch (const Error& e) {
    fail("error", e.what());
  }
}

GraphResult examine(const MultiGraph& g, const CensusOptions& opt) {
  GraphResult r;
  CensusRecord& rec = r.record;
  rec.graph = g;
  rec.key = hex(canonical_key(g));
  rec.vertices = g.vertex_count();
  rec.edges = g.edge_count();
  rec.aut_order = automorphism_group_order(g);
  if (rec.aut_order > opt.aut_budget) {
    rec.truncated = true;
    return r;
  }
  const ActionGroup aut = automorphism_group(g, opt.aut_budget);
  HarmonicSearch search(aut);
  search.run();
  rec.harmonic_subgroups = search.harmonic().size();

  // Witness: largest order, then smallest element indices.
  const auto& all = search.harmonic();
  const HarmonicSearch::Sub* best = &all.front();
  for (const auto& s : all)
    if (s.members.size() > best->members.size()) best = &s;
  for (const auto& s : all) {
    const ActionGroup h = search.materialize(s);
    check_pair(h, rec.key, r, &s == best ? &rec.witness_profile : nullptr);
    if (&s == best) {
      rec.max_order = h.order();
      rec.witness_generators = h.generators();
      if (rec.witness_profile) rec.witness_case = classify_branch_locus(*rec.witness_profile).tag();
    }
  }

  auto definition = [&](const HarmonicSearch::Sub& s, bool expect) {
    if (s.members.size() > opt.definition_budget) return;
    ++r.definition_checks;
    const ActionGroup h = search.materialize(s);
    if (is_harmonic_action_by_definition(h, opt.definition_budget) != expect)
      r.violations.push_back(CensusViolation{rec.key, h.order(), "criterion_vs_definition",
                                             expect ? "definition rejects a criterion-harmonic group"
                                                    : "definition accepts a criterion-rejected group"});
  };
  for (const auto* s : search.maximal()) definition(*s, true);
  for (const auto& s : search.bad_cyclic()) definition(s, false);
  for (const auto& s : search.rejected()) definition(s, false);
  return r;
}

}  // namespace

std::vector<ActionGroup> harmonic_subgroups(const ActionGroup& group) {
  HarmonicSearch search(group);
  search.run();
  std::vector<ActionGroup> out;
  for (const auto& s : search.harmonic()) out.push_back(search.materialize(s));
  return out;
}

MaxHarmonic max_harmonic_order(const MultiGraph& g, std::size_t budget) {
  const ActionGroup aut = automorphism_group(g, budget);
  HarmonicSearch search(aut);
  search.run();
  const auto& all = search.harmonic();
  const HarmonicSearch::Sub* best = &all.front();
  for (const auto& s : all)
    if (s.members.size() > best->members.size()) best = &s;
  return MaxHarmonic{best->members.size(), search.materialize(*best)};
}

CensusReport run_census(const CensusOptions& opt) {
  if (opt.genus < 0) throw Error(Errc::InvalidArgument, "genus must be >= 0");
  if (opt.max_vertices < 2) throw Error(Errc::InvalidArgument, "max vertices must be >= 2");
  if (opt.aut_budget == 0 || opt.jobs == 0) throw Error(Errc::InvalidArgument, "budgets must be positive");

  const std::vector<MultiGraph> graphs = enumerate_graphs(opt.genus, opt.max_vertices);
  std::vector<std::optional<GraphResult>> results(graphs.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= graphs.size()) return;
      try {
        results[i] = examine(graphs[i], opt);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!failure) failure = std::current_exception();
        next = graphs.size();
        return;
      }
    }
  };
  const std::size_t jobs = std::min(opt.jobs, std::max<std::size_t>(graphs.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  CensusReport report;
  report.genus = opt.genus;
  report.max_vertices = opt.max_vertices;
  for (auto& r : results) {
    report.max_order = std::max(report.max_order, r->record.max_order);
    report.harmonic_pairs += r->pairs;
    report.definition_checks += r->definition_checks;
    report.truncated = report.truncated || r->record.truncated;
    for (auto& v : r->violations) report.violations.push_back(std::move(v));
    report.records.push_back(std::move(r->record));
  }
  if (opt.genus <= 1)
    report.notes.push_back("genus " + std::to_string(opt.genus) +
                           ": harmonic orders are unbounded in this genus; bound checks are skipped");
  report.notes.push_back("finite-range evidence over graphs with at most " +
                         std::to_string(opt.max_vertices) + " vertices; not a computation of M(g)");
  if (report.truncated)
    report.notes.push_back("some graphs have |Aut| above the budget of " + std::to_string(opt.aut_budget) +
                           " and were not searched");
  return report;
}

}  // namespace harmonica
