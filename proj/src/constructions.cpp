#include "coalition/constructions.hpp"

#include <functional>

#include "coalition/error.hpp"
#include "coalition/graph.hpp"

namespace coalition {

namespace {

using Blocks = std::vector<std::vector<int>>;  // 1-indexed terms
using Formula = std::function<Blocks(int)>;

int ceil_half(int k) { return (k + 1) / 2; }

/// Terms f(i) for i = lo..hi; nothing when lo > hi.
std::vector<int> terms(int lo, int hi, const std::function<int(int)>& f) {
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(f(i));
  return out;
}

std::vector<int> join(std::vector<int> a, std::initializer_list<int> extra) {
  a.insert(a.end(), extra);
  return a;
}

std::vector<int> interval(int lo, int hi) {
  return terms(lo, hi, [](int i) { return i; });
}

Blocks fixed(Blocks b) { return b; }

struct Entry {
  ConstructionSpec spec;
  Formula formula;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> t;
    auto add = [&](std::string id, int lo, int hi, CpClass c, std::string text, Formula f) {
      t.push_back(Entry{ConstructionSpec{std::move(id), lo, hi, c, std::move(text)}, std::move(f)});
    };

    add("singletons_p1", 1, 1, CpClass::K1, "{1}", [](int) { return fixed({{1}}); });
    add("singletons_p2", 2, 2, CpClass::K2bar, "{1},{2}", [](int) { return fixed({{1}, {2}}); });
    add("singletons_p3", 3, 3, CpClass::K1uK2, "{1},{2},{3}", [](int) { return fixed({{1}, {2}, {3}}); });

    add("halves_k2", 4, 0, CpClass::K2, "A={1..floor(k/2)}, B=rest",
        [](int k) { return Blocks{interval(1, k / 2), interval(k / 2 + 1, k)}; });

    add("odd_even_p3", 4, 0, CpClass::P3, "A={1,2}, B={2i-1: i=2..ceil(k/2)}, C={2i: i=2..floor(k/2)}",
        [](int k) {
          return Blocks{{1, 2},
                        terms(2, ceil_half(k), [](int i) { return 2 * i - 1; }),
                        terms(2, k / 2, [](int i) { return 2 * i; })};
        });

    add("ends_c4", 4, 0, CpClass::C4,
        "{1},{2}, C={k-(2i+1): i=0..floor(k/2)-2}, D={k-2i: i=0..ceil(k/2)-2}", [](int k) {
          return Blocks{{1},
                        {2},
                        terms(0, k / 2 - 2, [k](int i) { return k - (2 * i + 1); }),
                        terms(0, ceil_half(k) - 2, [k](int i) { return k - 2 * i; })};
        });

    add("paw", 5, 0, CpClass::F1paw,
        "k=6: {1,5},{3,6},{4},{2}; even: A={k-2i}+{1,k}, B={k-(2i-1)}+{2} over i=2..k/2-2, "
        "C={k-2}, D={3,k-1}; odd: same A,B over i=2..(k-3)/2, C={k-2}, D={k-1}",
        [](int k) {
          if (k == 6) return fixed({{1, 5}, {3, 6}, {4}, {2}});
          const int hi = k % 2 == 0 ? k / 2 - 2 : (k - 3) / 2;
          Blocks b{join(terms(2, hi, [k](int i) { return k - 2 * i; }), {1, k}),
                   join(terms(2, hi, [k](int i) { return k - (2 * i - 1); }), {2}),
                   {k - 2}};
          if (k % 2 == 0)
            b.push_back({3, k - 1});
          else
            b.push_back({k - 1});
          return b;
        });

    add("star_k13", 6, 0, CpClass::K13, "{1..k-4, k}, {k-3}, {k-2}, {k-1}",
        [](int k) { return Blocks{join(interval(1, k - 4), {k}), {k - 3}, {k - 2}, {k - 1}}; });

    add("triangle_k3", 6, 0, CpClass::K3,
        "A={k-3i: i=2..floor(k/3)-1}+{1,k-2}, B={k-(3i+1): i=1..floor(k/3)-1}+{2,k}, "
        "C={k-(3i+2): i=1..floor((k+1)/3)-2}+{k-1,k-3}",
        [](int k) {
          return Blocks{join(terms(2, k / 3 - 1, [k](int i) { return k - 3 * i; }), {1, k - 2}),
                        join(terms(1, k / 3 - 1, [k](int i) { return k - (3 * i + 1); }), {2, k}),
                        join(terms(1, (k + 1) / 3 - 2, [k](int i) { return k - (3 * i + 2); }), {k - 1, k - 3})};
        });

    add("k4_minus_e", 6, 0, CpClass::K4e,
        "even: A={2i+1: i=0..k/2-3}+{k-1}, B={2i: i=1..k/2-2}+{k}; odd: A={2i+1: i=0..(k-5)/2}+{k}, "
        "B={2i: i=1..(k-5)/2}+{k-1}; C={k-3}, D={k-2}",
        [](int k) {
          const auto odd = [](int i) { return 2 * i + 1; };
          const auto even = [](int i) { return 2 * i; };
          if (k % 2 == 0)
            return Blocks{join(terms(0, k / 2 - 3, odd), {k - 1}), join(terms(1, k / 2 - 2, even), {k}), {k - 3},
                          {k - 2}};
          return Blocks{join(terms(0, (k - 5) / 2, odd), {k}), join(terms(1, (k - 5) / 2, even), {k - 1}), {k - 3},
                        {k - 2}};
        });

    add("p2_u_p3", 6, 0, CpClass::P2uP3,
        "even: A={2i+1: i=0..(k-6)/2}+{k}, B={2,k-4}, C={k-3}, D={k-2}, F={2i: i=2..(k-6)/2}+{k-1}; "
        "odd: A={2i+1: i=0..(k-7)/2}+{k-1}, B={2,k-5}, C={k-4}, D={k-3}, F={2i: i=2..(k-7)/2}+{k-2,k}",
        [](int k) {
          const auto odd = [](int i) { return 2 * i + 1; };
          const auto even = [](int i) { return 2 * i; };
          if (k % 2 == 0)
            return Blocks{join(terms(0, (k - 6) / 2, odd), {k}), {2, k - 4}, {k - 3}, {k - 2},
                          join(terms(2, (k - 6) / 2, even), {k - 1})};
          return Blocks{join(terms(0, (k - 7) / 2, odd), {k - 1}), {2, k - 5}, {k - 4}, {k - 3},
                        join(terms(2, (k - 7) / 2, even), {k - 2, k})};
        });

    add("path_p4", 7, 0, CpClass::P4,
        "A={k-2i: i=3..ceil(k/2)-2}+{1,k-2,k}, B={k-(2i-1): i=3..floor(k/2)-1}+{2,k-3}, C={k-4}, D={k-1}",
        [](int k) {
          return Blocks{join(terms(3, ceil_half(k) - 2, [k](int i) { return k - 2 * i; }), {1, k - 2, k}),
                        join(terms(3, k / 2 - 1, [k](int i) { return k - (2 * i - 1); }), {2, k - 3}),
                        {k - 4},
                        {k - 1}};
        });

    add("path_p5", 7, 0, CpClass::P5, "A={2i: i=3..floor(k/2)}+{1}, B={2i+1: i=3..ceil(k/2)-1}+{2}, {3},{4},{5}",
        [](int k) {
          return Blocks{join(terms(3, k / 2, [](int i) { return 2 * i; }), {1}),
                        join(terms(3, ceil_half(k) - 1, [](int i) { return 2 * i + 1; }), {2}),
                        {3},
                        {4},
                        {5}};
        });

    add("two_k2", 8, 0, CpClass::TwoK2,
        "k=8..11 fixed; k>=12: A={1,k-3,k-1}, B={2,4,k}, C={2i+1: i=2..ceil(k/2)-3}+{3}, "
        "D={2i: i=3..ceil(k/2)-2}+{k-2}",
        [](int k) {
          switch (k) {
            case 8: return fixed({{1, 7}, {2, 8}, {3, 4}, {5, 6}});
            case 9: return fixed({{1, 8}, {2, 4, 9}, {3, 5}, {6, 7}});
            case 10: return fixed({{1, 9}, {2, 4, 10}, {3, 5, 6}, {7, 8}});
            case 11: return fixed({{1, 10}, {2, 4, 11}, {3, 5, 7}, {6, 8, 9}});
            default: break;
          }
          return Blocks{{1, k - 3, k - 1},
                        {2, 4, k},
                        join(terms(2, ceil_half(k) - 3, [](int i) { return 2 * i + 1; }), {3}),
                        join(terms(3, ceil_half(k) - 2, [](int i) { return 2 * i; }), {k - 2})};
        });

    add("f2", 9, 0, CpClass::F2, "A={2i+1: i=4..ceil(k/2)-1}+{1}, B={2i: i=4..floor(k/2)}+{2}, {3,6},{4,7},{5}",
        [](int k) {
          return Blocks{join(terms(4, ceil_half(k) - 1, [](int i) { return 2 * i + 1; }), {1}),
                        join(terms(4, k / 2, [](int i) { return 2 * i; }), {2}),
                        {3, 6},
                        {4, 7},
                        {5}};
        });

    add("bull", 9, 0, CpClass::B1bull,
        "A={2i: i=4..floor(k/2)}+{1,4}, B={2i+1: i=4..ceil(k/2)-1}+{2,6}, {3},{5},{7}", [](int k) {
          return Blocks{join(terms(4, k / 2, [](int i) { return 2 * i; }), {1, 4}),
                        join(terms(4, ceil_half(k) - 1, [](int i) { return 2 * i + 1; }), {2, 6}),
                        {3},
                        {5},
                        {7}};
        });

    add("s12", 9, 0, CpClass::S12, "A={2i: i=3..floor(k/2)}+{1}, B={2i+1: i=4..ceil(k/2)-1}+{2,5}, {3},{4},{7}",
        [](int k) {
          return Blocks{join(terms(3, k / 2, [](int i) { return 2 * i; }), {1}),
                        join(terms(4, ceil_half(k) - 1, [](int i) { return 2 * i + 1; }), {2, 5}),
                        {3},
                        {4},
                        {7}};
        });

    add("bullet_p8_s12", 8, 8, CpClass::S12, "{1,4},{2,6,8},{3},{5},{7}",
        [](int) { return fixed({{1, 4}, {2, 6, 8}, {3}, {5}, {7}}); });
    add("bullet_p7_s12", 7, 7, CpClass::S12, "{1,4},{2,6},{3},{5},{7}",
        [](int) { return fixed({{1, 4}, {2, 6}, {3}, {5}, {7}}); });
    add("bullet_p7_2k2", 7, 7, CpClass::TwoK2, "{1,7},{2},{3,4},{5,6}",
        [](int) { return fixed({{1, 7}, {2}, {3, 4}, {5, 6}}); });
    add("bullet_p6_p4", 6, 6, CpClass::P4, "{1,4},{2},{3,5},{6}",
        [](int) { return fixed({{1, 4}, {2}, {3, 5}, {6}}); });
    add("bullet_p6_2k2", 6, 6, CpClass::TwoK2, "{1,6},{2},{3,4},{5}",
        [](int) { return fixed({{1, 6}, {2}, {3, 4}, {5}}); });
    add("bullet_p5_p4", 5, 5, CpClass::P4, "{1},{2},{3,4},{5}", [](int) { return fixed({{1}, {2}, {3, 4}, {5}}); });
    add("bullet_p5_k3", 5, 5, CpClass::K3, "{1,5},{2},{3,4}", [](int) { return fixed({{1, 5}, {2}, {3, 4}}); });
    return t;
  }();
  return table;
}

const Entry& entry_for(const ConstructionSpec& spec) {
  for (const Entry& e : entries())
    if (e.spec.id == spec.id) return e;
  throw Error(ErrorCode::UnknownSpec, "unknown construction '" + spec.id + "'");
}

}  // namespace

const std::vector<ConstructionSpec>& construction_specs() {
  static const std::vector<ConstructionSpec> specs = [] {
    std::vector<ConstructionSpec> out;
    for (const Entry& e : entries()) out.push_back(e.spec);
    return out;
  }();
  return specs;
}

const ConstructionSpec& construction_spec(std::string_view id) {
  for (const ConstructionSpec& s : construction_specs())
    if (s.id == id) return s;
  throw Error(ErrorCode::UnknownSpec, "unknown construction '" + std::string(id) + "'");
}

VertexPartition build_construction(const ConstructionSpec& spec, int k) {
  if (!spec.in_range(k))
    throw Error(ErrorCode::OutOfRange, spec.id + " is not defined for k=" + std::to_string(k));
  if (k > kMaxVertices) throw Error(ErrorCode::TooLarge, "k=" + std::to_string(k));
  const Blocks raw = entry_for(spec).formula(k);
  auto malformed = [&](const std::string& why) {
    return Error(ErrorCode::MalformedConstruction, spec.id + " at k=" + std::to_string(k) + ": " + why);
  };
  std::vector<VertexSet> blocks;
  Mask seen = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    VertexSet b;
    for (int s : raw[i]) {
      if (s < 1 || s > k) throw malformed("term s" + std::to_string(s) + " outside 1.." + std::to_string(k));
      b |= VertexSet::single(s - 1);
    }
    if (b.empty()) throw malformed("block " + std::to_string(i) + " is empty");
    if (b.bits() & seen) {
      const int v = std::countr_zero(b.bits() & seen);
      throw malformed("s" + std::to_string(v + 1) + " lies in two blocks");
    }
    seen |= b.bits();
    blocks.push_back(b);
  }
  if (seen != full_mask(k)) {
    const int v = std::countr_zero(~seen & full_mask(k));
    throw malformed("s" + std::to_string(v + 1) + " is not covered");
  }
  return VertexPartition(k, std::move(blocks));
}

int ConstructionReport::failures() const {
  int n = 0;
  for (const auto& c : checks) n += c.ok ? 0 : 1;
  return n;
}

ConstructionReport verify_constructions(int k_max) {
  if (k_max < 10 || k_max > kMaxVertices)
    throw Error(ErrorCode::BadParameter, "k_max must lie in 10.." + std::to_string(kMaxVertices));
  ConstructionReport report;
  for (const ConstructionSpec& spec : construction_specs()) {
    for (int k = spec.k_min; k <= (spec.k_max ? spec.k_max : k_max) && k <= k_max; ++k) {
      ConstructionCheck check{spec.id, k, false, CpClass::Outside, {}};
      try {
        const Graph g = path_graph(k);
        const VertexPartition p = build_construction(spec, k);
        const auto validity = validate_partition(g, p);
        if (!validity.valid) {
          check.detail = "not a coalition partition: " + format_partition(p, true);
        } else {
          check.got = classify_cp(coalition_graph(g, p).graph);
          check.ok = check.got == spec.claimed;
          if (!check.ok)
            check.detail = "coalition graph is " + std::string(to_string(check.got)) + ", claimed " +
                           std::string(to_string(spec.claimed));
        }
      } catch (const Error& e) {
        check.detail = e.what();
      }
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

}  // namespace coalition
