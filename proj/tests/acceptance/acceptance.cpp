// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit 1 on any FAIL.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "permlab/closure.hpp"
#include "permlab/embedding.hpp"
#include "permlab/error.hpp"
#include "permlab/permutation.hpp"
#include "permlab/replay.hpp"
#include "permlab/serialize.hpp"

using namespace permlab;
namespace fs = std::filesystem;

namespace {

// Shape violations seen anywhere in criteria 1-5, and explicit shape checks run.
std::size_t g_shape_violations = 0;
std::size_t g_shape_checks = 0;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& why) {
    if (pass) first_failure = why;
    pass = false;
  }
};

std::vector<DoublyOrderedSet> structures_up_to(std::size_t n) {
  std::vector<DoublyOrderedSet> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto& d : enumerate_small_doubly_ordered(k)) out.push_back(std::move(d));
  return out;
}

std::string describe(const DoublyOrderedSet& d) {
  std::string s = to_document(to_json(d.to_spec()));
  std::string flat;
  for (char c : s)
    if (c != '\n' && c != ' ') flat += c;
  return flat;
}

AtomSet all_atoms(const Universe& u) {
  AtomSet a(u.size());
  for (AtomId i = 0; i < a.size(); ++i) a[i] = i;
  return a;
}

/// Runs both shape checks over every atom they apply to.
void sweep_shapes(const Universe& u) {
  for (AtomId a = 0; a < u.size(); ++a) {
    try {
      ++g_shape_checks;
      closure_shape_lestar(u, a, u.atom(a).element);
      if (u.atom(a).is_base()) {
        ++g_shape_checks;
        closure_shape_le(u, a);
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ShapeViolation) ++g_shape_violations;
      else throw;
    }
  }
}

template <typename F>
void guarded(Outcome& o, const std::string& where, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ShapeViolation) ++g_shape_violations;
    o.fail(where + ": " + e.what());
  }
}

Outcome criterion1() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / "permlab_acceptance";
  fs::create_directories(dir);
  std::size_t runs = 0;
  std::size_t expected = 0;
  for (std::size_t n = 1; n <= kMaxEnumerationSize; ++n) {
    const auto all = enumerate_small_doubly_ordered(n);
    expected += oracle::count_doubly_ordered(n);
    if (all.size() != oracle::count_doubly_ordered(n))
      o.fail("enumeration count differs from brute force at n=" + std::to_string(n));
    for (std::size_t i = 0; i < all.size(); ++i) {
      const fs::path file = dir / ("order_" + std::to_string(n) + "_" + std::to_string(i) + ".json");
      std::ofstream(file) << to_document(to_json(all[i].to_spec()));
      cli::RunConfig config;
      config.input_path = file.string();
      config.depth = 2;
      config.index_budget = 3;
      config.support_budget = 1;
      const auto r = cli::cmd_report(config);
      ++runs;
      if (r.err.find("ShapeViolation") != std::string::npos) ++g_shape_violations;
      if (r.exit_code != 0) o.fail(describe(all[i]) + ": exit " + std::to_string(r.exit_code) + " " + r.err);
    }
  }
  if (runs != expected) o.fail("ran " + std::to_string(runs) + " of " + std::to_string(expected));
  o.detail = std::to_string(runs) + " structures on T(2,3), support budget 1";
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t cases = 0;
  for (const auto& d : enumerate_small_doubly_ordered(2)) {
    const auto u = build_universe(d, 2, 3);
    guarded(o, describe(d), [&] { sweep_shapes(*u); });
    std::vector<AtomSet> single(u->size());
    for (AtomId a = 0; a < u->size(); ++a) {
      single[a] = closure(*u, AtomSet{a}).members;
      const auto naive = oracle::naive_closure(*u, {a});
      if (!std::equal(single[a].begin(), single[a].end(), naive.begin(), naive.end()))
        o.fail(describe(d) + ": closure differs from naive saturation at atom " + std::to_string(a));
      if (closure(*u, single[a]).members != single[a]) o.fail("idempotence, |B|=1");
      ++cases;
    }
    if (!closure(*u, AtomSet{}).members.empty()) o.fail("closure of empty set");
    for (AtomId a = 0; a < u->size(); ++a)
      for (AtomId b = a + 1; b < u->size(); ++b) {
        const AtomSet ab{a, b};
        const AtomSet c = closure(*u, ab).members;
        if (closure(*u, c).members != c) o.fail("idempotence, |B|=2");
        if (c != set_union(single[a], single[b])) o.fail("finite additivity");
        if (!std::includes(c.begin(), c.end(), single[a].begin(), single[a].end()) ||
            !std::includes(c.begin(), c.end(), single[b].begin(), single[b].end()))
          o.fail("monotonicity");
        const auto naive = oracle::naive_closure(*u, {a, b});
        if (!std::equal(c.begin(), c.end(), naive.begin(), naive.end()))
          o.fail("closure differs from naive saturation on a pair");
        ++cases;
      }
  }
  o.detail = std::to_string(cases) + " base sets over the 2-element structures";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::mt19937_64 rng(3);
  std::size_t samples = 0;
  for (const auto& d : enumerate_small_doubly_ordered(2)) {
    const auto u = build_universe(d, 2, 3);
    for (int s = 0; s < 200; ++s) {
      const std::size_t size = rng() % 4;
      std::vector<AtomId> pick;
      for (std::size_t i = 0; i < size; ++i) pick.push_back(static_cast<AtomId>(rng() % u->size()));
      const AtomSet b = make_atom_set(pick);
      const auto c = closure(*u, b);
      for (AtomId x : c.x_part)
        if (u->atom(x).index != 0) o.fail("nonzero index in X-part");
      std::size_t bound = 0;
      for (AtomId x : b) bound += u->level(x) + 1;
      const auto nz = nonzero_index_part(*u, b);
      if (nz.size() > bound) o.fail("nonzero-index part exceeds bound");
      if (!std::includes(c.y_part.begin(), c.y_part.end(), nz.begin(), nz.end()))
        o.fail("nonzero-index part outside Y-part");
      ++samples;
    }
  }
  o.detail = std::to_string(samples) + " seeded samples, |B| <= 3";
  return o;
}

/// Every pr1-preserving permutation of A_0, as image arrays.
std::vector<std::vector<AtomId>> base_group(const Universe& u) {
  std::vector<std::vector<AtomId>> out{all_atoms(u)};
  out.front().resize(u.stratum_size(0));
  for (ElementId p = 0; p < u.order().size(); ++p) {
    std::vector<AtomId> block;
    for (AtomId a : u.sector(p))
      if (u.atom(a).is_base()) block.push_back(a);
    std::vector<std::vector<AtomId>> next;
    for (const auto& g : out) {
      auto perm = block;
      do {
        auto h = g;
        for (std::size_t i = 0; i < block.size(); ++i) h[block[i]] = perm[i];
        next.push_back(std::move(h));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    out = std::move(next);
  }
  return out;
}

Outcome criterion4() {
  Outcome o;
  std::size_t movers = 0, extensions = 0;
  for (const auto& d : structures_up_to(3)) {
    const auto u = build_universe(d, 2, 3);
    const auto g0 = base_group(*u);
    const std::size_t a0 = u->stratum_size(0);
    std::vector<AtomSet> supports{AtomSet{}};
    for (AtomId a = 0; a < u->size(); ++a) supports.push_back(AtomSet{a});
    for (const auto& b : supports) {
      const auto cl = closure(*u, b);
      guarded(o, describe(d), [&] {
        for (AtomId c = 0; c < u->size(); ++c) {
          if (cl.contains(c)) continue;
          const auto m = mover(*u, b, c);
          if (!is_member(*u, m.map())) o.fail("mover not a member");
          if (!m.fixes_pointwise(cl.members)) o.fail("mover moves the closure");
          if (!m.moves(c)) o.fail("mover fixes its target");
          ++movers;
        }
      });
      std::vector<AtomId> base_part;
      for (AtomId x : cl.members)
        if (x < a0) base_part.push_back(x);
      for (const auto& g : g0) {
        bool fixes = true;
        for (AtomId x : base_part) fixes = fixes && g[x] == x;
        if (!fixes) continue;
        guarded(o, describe(d), [&] {
          if (!equivariant_extension(*u, g, 0).fixes_pointwise(cl.members))
            o.fail("extension moves the closure");
        });
        ++extensions;
      }
    }
  }
  o.detail = std::to_string(movers) + " movers, " + std::to_string(extensions) +
             " extensions over all structures with <= 3 elements on T(2,3)";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t cases = 0;
  for (const auto& d : structures_up_to(3)) {
    const auto u = build_universe(d, 2, 3);
    guarded(o, describe(d), [&] { sweep_shapes(*u); });
    std::vector<AtomSet> supports{AtomSet{}};
    for (AtomId a = 0; a < u->size(); ++a) supports.push_back(AtomSet{a});
    for (const auto& b : supports) {
      if (common_fixed_points(*u, fixing_generators(*u, b)) != closure(*u, b).members)
        o.fail(describe(d) + ": fixed points differ from closure");
      ++cases;
    }
  }
  o.detail = std::to_string(cases) + " supports, |B| <= 1, T(2,3)";
  return o;
}

Outcome criterion6() {
  Outcome o;
  if (g_shape_checks == 0) o.fail("no shape checks ran");
  if (g_shape_violations != 0) o.fail(std::to_string(g_shape_violations) + " shape violations");
  o.detail = std::to_string(g_shape_checks) + " explicit checks plus every refutation, " +
             std::to_string(g_shape_violations) + " violations";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto all = structures_up_to(3);
  std::mt19937_64 rng(7);
  struct Cached {
    std::shared_ptr<const Universe> u, deeper, wider;
    std::vector<Permutation> gens;
  };
  std::map<std::size_t, Cached> cache;
  std::size_t words = 0, embeddings = 0;
  for (int w = 0; w < 500; ++w) {
    const std::size_t i = rng() % all.size();
    auto it = cache.find(i);
    if (it == cache.end()) {
      Cached c;
      c.u = build_universe(all[i], 2, 3);
      c.deeper = build_universe(all[i], 3, 3);
      c.wider = build_universe(all[i], 2, 4);
      c.gens = fixing_generators(*c.u, AtomSet{});
      it = cache.emplace(i, std::move(c)).first;
    }
    const Cached& c = it->second;
    auto f = Permutation::identity(*c.u);
    const std::size_t length = 1 + rng() % 12;
    for (std::size_t k = 0; k < length && !c.gens.empty(); ++k)
      f = compose(c.gens[rng() % c.gens.size()], f);
    if (rng() % 2) f = inverse(f);
    ++words;
    if (!is_member(*c.u, f.map())) o.fail("random word is not a member");
    if (!is_member(*c.deeper, canonical_embedding(f, *c.deeper))) o.fail("embedding into T(3,3)");
    if (!is_member(*c.wider, canonical_embedding(f, *c.wider))) o.fail("embedding into T(2,4)");
    embeddings += 2;
  }
  o.detail = std::to_string(words) + " words, " + std::to_string(embeddings) + " embeddings";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t pairs = 0;
  for (std::size_t x = 0; x <= 4; ++x)
    for (std::size_t y = 0; y <= 4; ++y) {
      if (finite_le(x, y) != oracle::search_injection(x, y)) o.fail("finite_le disagrees");
      if (finite_lestar(x, y) != oracle::search_partial_surjection(x, y))
        o.fail("finite_lestar disagrees");
      ++pairs;
    }
  o.detail = std::to_string(pairs) + " size pairs";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto all = structures_up_to(3);
  std::mt19937_64 rng(9);
  auto stable = [&](const std::string& what, const std::string& doc, const std::string& again) {
    if (doc != again) o.fail(what + " changed after parse and serialize");
  };
  for (int t = 0; t < 100; ++t) {
    const auto& d = all[rng() % all.size()];
    guarded(o, describe(d), [&] {
      const std::string spec_doc = to_document(to_json(d.to_spec()));
      stable("spec", spec_doc, to_document(to_json(parse_order_spec(spec_doc))));

      const std::size_t depth = d.size() <= 2 ? 1 + rng() % 2 : 1;
      const auto u = build_universe(d, depth, 3);
      const auto n = static_cast<ElementId>(d.size());
      // (p, q, lestar holds): lestar cells refute surjections, the rest injections
      std::vector<std::tuple<ElementId, ElementId, bool>> negative;
      for (ElementId p = 0; p < n; ++p)
        for (ElementId q = 0; q < n; ++q)
          if (!d.le(p, q)) negative.emplace_back(p, q, d.lestar(p, q));
      if (!negative.empty()) {
        const auto [p, q, star] = negative[rng() % negative.size()];
        const AtomSet support{static_cast<AtomId>(rng() % u->size())};
        const auto cert = star ? refute_injection(*u, p, q, support)
                               : refute_surjection(*u, p, q, support);
        const std::string doc = to_document(to_json(*u, cert));
        stable("certificate", doc,
               to_document(to_json(*u, certificate_from_json(*u, parse_document(doc)))));
      }

      ReportOptions opts;
      opts.seed = rng();
      const auto report = embedding_report(u, opts);
      const std::string doc = to_document(to_json(report));
      stable("report", doc, to_document(to_json(report_from_json(parse_document(doc)))));
      if (to_document(to_json(embedding_report(u, opts))) != doc) o.fail("report not deterministic");
    });
  }

  const fs::path file = fs::temp_directory_path() / "permlab_acceptance" / "repeat.json";
  std::ofstream(file) << to_document(to_json(enumerate_small_doubly_ordered(2).back().to_spec()));
  cli::RunConfig config;
  config.input_path = file.string();
  config.output_format = cli::OutputFormat::json;
  const auto first = cli::cmd_report(config);
  const auto second = cli::cmd_report(config);
  if (first.exit_code != 0 || first.out != second.out) o.fail("repeated cmd_report output differs");
  o.detail = "100 seeded round trips, repeated report byte-identical";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"1 report matrices equal input relations, all evidence replays", criterion1},
      {"2 closure laws and naive-saturation agreement", criterion2},
      {"3 index bound on closures", criterion3},
      {"4 movers and equivariant extensions fix closures", criterion4},
      {"5 fixed points of fixing generators equal closure", criterion5},
      {"6 shape checks never violated", criterion6},
      {"7 group words stay members under canonical embedding", criterion7},
      {"8 finite comparison agrees with function search", criterion8},
      {"9 serialization round trips and determinism", criterion9},
  };

  bool all_pass = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("uncaught: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all_pass = all_pass && o.pass;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (o.pass ? "[PASS] " : "[FAIL] ") << c.name << " (" << o.detail << "; "
         << secs << "s)";
    if (!o.pass) line << " first failure: " << o.first_failure;
    std::cout << line.str() << std::endl;
  }
  return all_pass ? 0 : 1;
}
