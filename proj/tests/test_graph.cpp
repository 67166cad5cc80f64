#include <doctest.h>

#include <functional>
#include <random>

#include "mpa/error.hpp"
#include "mpa/graph.hpp"

using namespace mpa;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an mpa::Error");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("add_node assigns sequential arrival indices") {
  AnnotatedGraph g;
  const NodeId first = g.add_node(NodeClass::Isp);
  CHECK(g.node(first).arrival_index == 0);
  CHECK(g.degree(first) == 0);
  g.add_node(NodeClass::Isp);
  g.add_node(NodeClass::NonIsp);
  const NodeId fourth = g.add_node(NodeClass::NonIsp);
  CHECK(g.node(fourth).arrival_index == 3);
  CHECK(g.node(fourth).cls == NodeClass::NonIsp);
}

TEST_CASE("class counts at the simulation scale") {
  AnnotatedGraph g;
  for (int i = 0; i < 7200; ++i) g.add_node(NodeClass::Isp);
  for (int i = 0; i < 16800; ++i) g.add_node(NodeClass::NonIsp);
  CHECK(g.count(NodeClass::Isp) == 7200);
  CHECK(g.count(NodeClass::NonIsp) == 16800);
}

TEST_CASE("customer-provider link annotates both ends") {
  AnnotatedGraph g;
  const NodeId y = g.add_node(NodeClass::Isp);
  const NodeId x = g.add_node(NodeClass::NonIsp);
  const LinkId l = g.add_c2p(x, y);
  CHECK(g.degree_vector(x) == DegreeVector{0, 1, 0});
  CHECK(g.degree_vector(y) == DegreeVector{1, 0, 0});
  CHECK(g.link(l).customer() == x);
  CHECK(g.link(l).provider() == y);
}

TEST_CASE("peering link between ISPs") {
  AnnotatedGraph g;
  const NodeId y = g.add_node(NodeClass::Isp);
  const NodeId z = g.add_node(NodeClass::Isp);
  g.add_p2p(y, z);
  CHECK(g.degree_vector(y).peers == 1);
  CHECK(g.degree_vector(z).peers == 1);
  CHECK(g.count(LinkKind::P2P) == 1);
}

TEST_CASE("rejected links leave the graph untouched") {
  AnnotatedGraph g;
  const NodeId y = g.add_node(NodeClass::Isp);
  const NodeId z = g.add_node(NodeClass::Isp);
  const NodeId x = g.add_node(NodeClass::NonIsp);
  g.add_c2p(z, y);

  CHECK(code_of([&] { g.add_p2p(y, x); }) == ErrorCode::KindViolation);
  CHECK(code_of([&] { g.add_c2p(y, x); }) == ErrorCode::KindViolation);
  CHECK(code_of([&] { g.add_c2p(y, y); }) == ErrorCode::SelfLoop);
  CHECK(code_of([&] { g.add_p2p(y, z); }) == ErrorCode::DuplicateLink);
  CHECK(code_of([&] { g.add_c2p(y, z); }) == ErrorCode::DuplicateLink);
  CHECK(code_of([&] { g.add_c2p(x, 17); }) == ErrorCode::UnknownNode);
  CHECK(code_of([&] { g.degree_vector(99); }) == ErrorCode::UnknownNode);

  CHECK(g.link_count() == 1);
  CHECK(g.degree_vector(x) == DegreeVector{});
  CHECK(g.degree_vector(y) == DegreeVector{1, 0, 0});
  CHECK_FALSE(validate(g).has_value());
}

TEST_CASE("degree vectors") {
  SUBCASE("isolated node") {
    AnnotatedGraph g;
    CHECK(g.degree_vector(g.add_node(NodeClass::Isp)) == DegreeVector{0, 0, 0});
  }
  SUBCASE("star center with five non-ISP customers") {
    AnnotatedGraph g;
    const NodeId hub = g.add_node(NodeClass::Isp);
    for (int i = 0; i < 5; ++i) g.add_c2p(g.add_node(NodeClass::NonIsp), hub);
    CHECK(g.degree_vector(hub) == DegreeVector{5, 0, 0});
  }
  SUBCASE("peering triangle member with one provider") {
    AnnotatedGraph g;
    const NodeId a = g.add_node(NodeClass::Isp);
    const NodeId b = g.add_node(NodeClass::Isp);
    const NodeId c = g.add_node(NodeClass::Isp);
    const NodeId up = g.add_node(NodeClass::Isp);
    g.add_p2p(a, b);
    g.add_p2p(b, c);
    g.add_p2p(c, a);
    g.add_c2p(a, up);
    CHECK(g.degree_vector(a) == DegreeVector{0, 1, 2});
    CHECK(g.degree(a) == 3);
  }
}

TEST_CASE("rewire_provider moves the provider end only") {
  AnnotatedGraph g;
  const NodeId p = g.add_node(NodeClass::Isp);
  const NodeId q = g.add_node(NodeClass::Isp);
  const NodeId x = g.add_node(NodeClass::Isp);
  const LinkId l = g.add_c2p(x, p);
  g.rewire_provider(l, q);
  CHECK(g.link(l).provider() == q);
  CHECK(g.link(l).customer() == x);
  CHECK(g.degree(p) == 0);
  CHECK(g.degree_vector(q).customers == 1);
  CHECK(g.has_link(x, q));
  CHECK_FALSE(g.has_link(x, p));
  CHECK(g.find_link(q, x) == l);
  CHECK_FALSE(validate(g).has_value());
}

TEST_CASE("labels are unique and searchable") {
  AnnotatedGraph g;
  const NodeId a = g.add_node(NodeClass::Isp, 3356);
  CHECK(g.find_label(3356) == a);
  CHECK_FALSE(g.find_label(1).has_value());
  CHECK_THROWS_AS(g.add_node(NodeClass::Isp, 3356), Error);
}

TEST_CASE("validate reports class violations introduced by set_class") {
  AnnotatedGraph g;
  const NodeId a = g.add_node(NodeClass::Isp);
  const NodeId b = g.add_node(NodeClass::Isp);
  g.add_p2p(a, b);
  g.set_class(b, NodeClass::NonIsp);
  CHECK(validate(g).has_value());
  CHECK_FALSE(validate(g, ValidationMode::Ingest).has_value());
  CHECK(count_class_violations(g) == 1);
}

TEST_CASE("property: random mutation sequences keep every invariant") {
  std::mt19937_64 rng(20240917);
  for (int trial = 0; trial < 50; ++trial) {
    AnnotatedGraph g;
    std::size_t accepted = 0, rejected = 0;
    for (int op = 0; op < 400; ++op) {
      const auto roll = rng() % 10;
      if (roll < 2 || g.node_count() < 2) {
        g.add_node(rng() % 3 == 0 ? NodeClass::NonIsp : NodeClass::Isp);
        continue;
      }
      const auto a = static_cast<NodeId>(rng() % g.node_count());
      const auto b = static_cast<NodeId>(rng() % g.node_count());
      const std::size_t before = g.link_count();
      try {
        if (roll < 6) {
          g.add_c2p(a, b);
        } else if (roll < 9) {
          g.add_p2p(a, b);
        } else if (g.link_count() > 0) {
          const auto l = static_cast<LinkId>(rng() % g.link_count());
          if (g.link(l).kind == LinkKind::C2P) g.rewire_provider(l, b);
        }
        ++accepted;
      } catch (const Error&) {
        CHECK(g.link_count() == before);
        ++rejected;
      }
      REQUIRE_FALSE(validate(g).has_value());
    }

    // Handshake identities.
    std::size_t customers = 0, providers = 0, peers = 0;
    for (const auto& n : g.nodes()) {
      const auto d = g.degree_vector(n.id);
      customers += d.customers;
      providers += d.providers;
      peers += d.peers;
      CHECK(d.total() == g.neighbors(n.id).size());
      if (n.cls == NodeClass::NonIsp) {
        CHECK(d.customers == 0);
        CHECK(d.peers == 0);
      }
    }
    CHECK(customers == g.count(LinkKind::C2P));
    CHECK(providers == g.count(LinkKind::C2P));
    CHECK(peers == 2 * g.count(LinkKind::P2P));
    CHECK(accepted + rejected > 0);
  }
}
