#include <doctest.h>

#include <map>
#include <random>

#include "mpa/error.hpp"
#include "mpa/generator.hpp"
#include "mpa/kernels.hpp"
#include "mpa/metrics.hpp"
#include "support/oracles.hpp"

using namespace mpa;
namespace mx = mpa::metrics;

namespace {

AnnotatedGraph star(int leaves) {
  AnnotatedGraph g;
  const NodeId hub = g.add_node(NodeClass::Isp);
  for (int i = 0; i < leaves; ++i) g.add_c2p(g.add_node(NodeClass::NonIsp), hub);
  return g;
}

// Complete graph on n ISPs, every link of one kind.
AnnotatedGraph mesh(int n, LinkKind kind) {
  AnnotatedGraph g;
  for (int i = 0; i < n; ++i) g.add_node(NodeClass::Isp);
  for (NodeId a = 0; a < static_cast<NodeId>(n); ++a)
    for (NodeId b = a + 1; b < static_cast<NodeId>(n); ++b) g.add_link(b, a, kind, b);
  return g;
}

AnnotatedGraph triangle() { return mesh(3, LinkKind::P2P); }

// Ring of ISPs, each joined to its next `half` successors: 2*half-regular.
AnnotatedGraph ring(int n, int half, LinkKind kind) {
  AnnotatedGraph g;
  for (int i = 0; i < n; ++i) g.add_node(NodeClass::Isp);
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= half; ++j) {
      const auto a = static_cast<NodeId>(i);
      const auto b = static_cast<NodeId>((i + j) % n);
      g.add_link(a, b, kind, a);
    }
  return g;
}

std::map<double, double> as_map(const BinnedSeries& s) {
  std::map<double, double> m;
  for (const auto& p : s.points) m[p.key] = p.mean;
  return m;
}

template <typename Values>
std::map<double, double> per_degree_means(const std::vector<std::uint32_t>& deg, const Values& v,
                                          std::uint32_t min_degree) {
  std::map<double, std::pair<double, std::size_t>> acc;
  for (std::size_t i = 0; i < deg.size(); ++i) {
    if (deg[i] < min_degree) continue;
    auto& cell = acc[deg[i]];
    cell.first += static_cast<double>(v[i]);
    ++cell.second;
  }
  std::map<double, double> out;
  for (const auto& [k, cell] : acc) out[k] = cell.first / static_cast<double>(cell.second);
  return out;
}

}  // namespace

TEST_CASE("degree CCDF examples") {
  AnnotatedGraph pair;
  pair.add_c2p(pair.add_node(NodeClass::Isp), pair.add_node(NodeClass::Isp));
  const auto two = mx::degree_ccdf(pair);
  REQUIRE(two.points.size() == 1);
  CHECK(two.points[0].value == 1.0);
  CHECK(two.points[0].fraction == 1.0);

  const auto s = mx::degree_ccdf(star(4));
  REQUIRE(s.points.size() == 2);
  CHECK(s.points[0].value == 1.0);
  CHECK(s.points[0].fraction == 1.0);
  CHECK(s.points[1].value == 4.0);
  CHECK(s.points[1].fraction == doctest::Approx(0.2));
  CHECK(s.population == 5);

  CHECK_THROWS_AS(mx::degree_ccdf(AnnotatedGraph{}), Error);
}

TEST_CASE("annotated CCDF without peering is a single point at zero") {
  const auto r = run([] {
    GeneratorConfig c;
    c.params = MpaParams{7.0 / 3.0, 1.0, 0.0, 1.86, 0.0};
    c.target_isps = 300;
    c.target_non_isps = 700;
    return c;
  }());
  const auto peers = mx::annotated_ccdf(r.graph, mx::DegreeType::Peers);
  REQUIRE(peers.points.size() == 1);
  CHECK(peers.points[0].value == 0.0);
  CHECK(peers.points[0].fraction == 1.0);
}

TEST_CASE("two-class output is dominated by degree-one non-ISPs") {
  GeneratorConfig c;
  c.params = two_class_params(7.0 / 3.0);
  c.target_isps = 600;
  c.target_non_isps = 1400;
  const auto r = run(c);
  const auto non_isp = mx::degree_ccdf(r.graph, NodeClass::NonIsp);
  REQUIRE(non_isp.points.size() == 1);
  CHECK(non_isp.points[0].value == 1.0);
  const auto all = mx::degree_ccdf(r.graph);
  CHECK(all.points[0].value == 1.0);
  CHECK(all.points[1].fraction < 0.35);
}

TEST_CASE("property: every CCDF is non-increasing and starts at one") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::random_graph(rng, 5 + trial, 0.3);
    for (const auto& ccdf :
         {mx::degree_ccdf(g), mx::annotated_ccdf(g, mx::DegreeType::Customers, std::nullopt),
          mx::annotated_ccdf(g, mx::DegreeType::Providers, std::nullopt)}) {
      REQUIRE_FALSE(ccdf.points.empty());
      CHECK(ccdf.points.front().fraction == 1.0);
      for (std::size_t i = 1; i < ccdf.points.size(); ++i) {
        CHECK(ccdf.points[i].value > ccdf.points[i - 1].value);
        CHECK(ccdf.points[i].fraction <= ccdf.points[i - 1].fraction);
      }
    }
  }
}

TEST_CASE("property: class histograms merge into the all-node histogram") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::random_graph(rng, 12, 0.35);
    std::map<std::uint32_t, std::size_t> merged, all;
    for (auto cls : {NodeClass::Isp, NodeClass::NonIsp}) {
      for (auto k : mx::degrees(g, cls)) ++merged[k];
    }
    for (auto k : mx::degrees(g)) ++all[k];
    CHECK(merged == all);

    // The CCDF fractions are consistent with the same histogram.
    const auto ccdf = mx::degree_ccdf(g);
    std::size_t at_least = g.node_count();
    for (const auto& p : ccdf.points) {
      CHECK(p.fraction == doctest::Approx(static_cast<double>(at_least) / g.node_count()));
      at_least -= all[static_cast<std::uint32_t>(p.value)];
    }
  }
}

TEST_CASE("add binned by provider count") {
  AnnotatedGraph g;
  const NodeId top = g.add_node(NodeClass::Isp);
  for (int i = 0; i < 4; ++i) {
    const NodeId isp = g.add_node(NodeClass::Isp);
    g.add_c2p(isp, top);
    for (int j = 0; j <= i; ++j) g.add_c2p(g.add_node(NodeClass::NonIsp), isp);
  }
  // The top ISP has no provider; everyone else has exactly one.
  const auto s = mx::add_binned(g, mx::DegreeType::Customers);
  REQUIRE(s.points.size() == 2);
  CHECK(s.points[0].key == 0.0);
  CHECK(s.points[1].key == 1.0);
  CHECK(s.points[1].mean == doctest::Approx(2.5));

  // Count-weighted mean over bins equals the overall mean customers per ISP.
  double weighted = 0.0;
  for (const auto& p : s.points) weighted += p.mean * p.count;
  const auto cust = mx::degrees(g, mx::DegreeType::Customers, NodeClass::Isp);
  double direct = 0.0;
  for (auto k : cust) direct += k;
  CHECK(weighted / s.population() == doctest::Approx(direct / cust.size()));
}

TEST_CASE("jdd average neighbor degree") {
  SUBCASE("single link between degree-one nodes") {
    AnnotatedGraph g;
    g.add_c2p(g.add_node(NodeClass::Isp), g.add_node(NodeClass::Isp));
    const auto s = mx::jdd_avg_neighbor(g, LinkKind::C2P, false);
    REQUIRE(s.points.size() == 1);
    CHECK(s.points[0].key == 1.0);
    CHECK(s.points[0].mean == 1.0);
    CHECK_THROWS_AS(mx::jdd_avg_neighbor(g, LinkKind::P2P, false), Error);
  }
  SUBCASE("complete graphs give n - 1, normalized 1") {
    for (int n = 3; n <= 20; ++n) {
      for (auto kind : {LinkKind::C2P, LinkKind::P2P}) {
        const auto g = mesh(n, kind);
        for (const auto& p : mx::jdd_avg_neighbor(g, kind, false).points) {
          CHECK(p.mean == doctest::Approx(n - 1.0));
        }
        for (const auto& p : mx::jdd_avg_neighbor(g, kind, true).points) {
          CHECK(p.mean == doctest::Approx(1.0));
        }
      }
    }
  }
  SUBCASE("regular graphs give the common degree") {
    for (int half = 1; half <= 3; ++half) {
      for (auto kind : {LinkKind::C2P, LinkKind::P2P}) {
        const auto g = ring(15, half, kind);
        const auto s = mx::jdd_avg_neighbor(g, kind, false);
        REQUIRE(s.points.size() == 1);
        CHECK(s.points[0].mean == doctest::Approx(2.0 * half));
      }
    }
  }
}

TEST_CASE("average neighbor degree examples") {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& p : mx::avg_neighbor_degree(mesh(n, LinkKind::P2P)).points) {
      CHECK(p.mean == doctest::Approx(n - 1.0));
    }
  }
  const auto s = as_map(mx::avg_neighbor_degree(star(4)));
  CHECK(s.at(1.0) == 4.0);
  CHECK(s.at(4.0) == 1.0);

  AnnotatedGraph path;
  const NodeId mid = path.add_node(NodeClass::Isp);
  path.add_c2p(path.add_node(NodeClass::NonIsp), mid);
  path.add_c2p(path.add_node(NodeClass::NonIsp), mid);
  const auto p = as_map(mx::avg_neighbor_degree(path));
  CHECK(p.at(1.0) == 2.0);
  CHECK(p.at(2.0) == 1.0);
}

TEST_CASE("clustering examples") {
  for (double c : mx::local_clustering(triangle())) CHECK(c == 1.0);
  for (double c : mx::local_clustering(star(6))) CHECK(c == 0.0);

  // K4 minus one edge: the two nodes of degree 3 sit in 2 of 3 possible
  // triangles, the two of degree 2 in their only one.
  AnnotatedGraph g = mesh(4, LinkKind::P2P);
  AnnotatedGraph k4m;
  for (int i = 0; i < 4; ++i) k4m.add_node(NodeClass::Isp);
  for (const auto& l : g.links()) {
    if (!(l.a == 3 && l.b == 2) && !(l.a == 2 && l.b == 3)) k4m.add_p2p(l.a, l.b);
  }
  const auto local = mx::local_clustering(k4m);
  CHECK(local[0] == doctest::Approx(2.0 / 3.0));
  CHECK(local[1] == doctest::Approx(2.0 / 3.0));
  CHECK(local[2] == 1.0);
  CHECK(local[3] == 1.0);
  const auto binned = as_map(mx::clustering_by_degree(k4m));
  CHECK(binned.at(2.0) == 1.0);
  CHECK(binned.at(3.0) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("mean degree") {
  CHECK(mx::mean_degree(triangle()) == 2.0);
  CHECK(mx::mean_degree(seed_graph()) == 1.0);
  CHECK_THROWS_AS(mx::mean_degree(AnnotatedGraph{}), Error);
}

TEST_CASE("property: metrics agree exactly with brute force on small random graphs") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 11;
    const double density = 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
    const auto g = oracle::random_graph(rng, n, density);

    const auto deg = oracle::degrees(g);
    const auto tri = oracle::triangles(g);
    const auto local = oracle::local_clustering(g);
    const auto sums = oracle::neighbor_degree_sums(g);

    const auto csr = kernels::build_csr(g);
    CHECK(kernels::triangles(csr) == tri);
    CHECK(kernels::serial::triangles(g) == tri);
    CHECK(kernels::neighbor_degree_sums(csr) == sums);
    CHECK(kernels::serial::neighbor_degree_sums(g) == sums);
    CHECK(mx::local_clustering(g) == local);

    CHECK(as_map(mx::clustering_by_degree(g)) == per_degree_means(deg, local, 2));

    std::vector<double> annd(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      if (deg[i] > 0) annd[i] = static_cast<double>(sums[i]) / deg[i];
    }
    CHECK(as_map(mx::avg_neighbor_degree(g)) == per_degree_means(deg, annd, 1));
  }
}

TEST_CASE("parallel kernels equal serial kernels on a generated graph") {
  const auto r = run(GeneratorConfig{measured_internet_params(), 1500, 3500, 9, 100, 0});
  const auto csr = kernels::build_csr(r.graph);
  CHECK(kernels::triangles(csr) == kernels::serial::triangles(r.graph));
  CHECK(kernels::neighbor_degree_sums(csr) == kernels::serial::neighbor_degree_sums(r.graph));
}

TEST_CASE("two-class trees have zero clustering everywhere") {
  GeneratorConfig c;
  c.params = two_class_params(7.0 / 3.0);
  c.target_isps = 1000;
  c.target_non_isps = 2333;
  const auto r = run(c);
  for (double x : mx::local_clustering(r.graph)) CHECK(x == 0.0);
}

TEST_CASE("degree bins") {
  CHECK(degree_bin(1).lo == 1);
  CHECK(degree_bin(16).hi == 16);
  CHECK(degree_bin(17).lo == 17);
  CHECK(degree_bin(32).hi == 32);
  CHECK(degree_bin(33).lo == 33);
  CHECK(degree_bin(64).hi == 64);
  CHECK(degree_bin(20).key() > 16.0);
  CHECK(degree_bin(20).key() < 32.0);
}
