#include <doctest.h>

#include <random>

#include "hyperspec/canonical.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/spectral.hpp"
#include "hyperspec/transforms.hpp"
#include "support.hpp"

using namespace hyperspec;

TEST_CASE("moving e_3 of P_3 from u_2 to u_1 gives D_3") {
  // P_3^(3): e_1={0,1,2}, e_2={2,3,4}, e_3={4,5,6}; u_1=2, u_2=4.
  const auto moved = move_edges(loose_path(3, 3), {2, {{{4, 5, 6}, 4}}});
  CHECK(is_isomorphic(moved, d_family(3, 3)));
  CHECK(moved.m() == 3);
}

TEST_CASE("move_edges rejects invalid specs") {
  const auto g = loose_path(3, 3);
  CHECK_THROWS_AS(move_edges(g, {0, {{{0, 1, 2}, 1}}}), TransformError);  // u in e
  CHECK_THROWS_AS(move_edges(g, {0, {{{4, 5, 7}, 4}}}), TransformError);  // not an edge
  CHECK_THROWS_AS(move_edges(g, {0, {{{4, 5, 6}, 3}}}), TransformError);  // v not in e
  CHECK_THROWS_AS(move_edges(g, {9, {{{4, 5, 6}, 4}}}), TransformError);  // u out of range
  CHECK_THROWS_AS(move_edges(g, {0, {}}), TransformError);
  // e' already present: moving {2,3,4} off 3 onto 1 would still be new, but
  // in TE(3,2) moving {1,2,3} off 3 onto 0 recreates {0,1,2}.
  CHECK_THROWS_AS(move_edges(two_edge_overlap(3, 2), {0, {{{1, 2, 3}, 3}}}), TransformError);
}

TEST_CASE("moving e_2 of P_2 onto a pendant vertex of e_1 keeps P_2") {
  const auto moved = move_edges(loose_path(3, 2), {0, {{{2, 3, 4}, 2}}});
  CHECK(is_isomorphic(moved, loose_path(3, 2)));
}

TEST_CASE("move_edges compacts a vertex left isolated") {
  // Moving the only edge at pendant vertex 6 off 6 leaves it isolated.
  const auto g = loose_path(3, 3);
  const auto moved = move_edges(g, {0, {{{4, 5, 6}, 6}}});
  CHECK(moved.n() == g.n() - 1);
  CHECK(moved.m() == g.m());
}

TEST_CASE("swap_parts reproduces the rewiring between two pendant paths") {
  // P_2^(3) with a path of 3 at u=3 and a path of 1 at v=4. Handing the
  // outer half of the second u-edge to the v-edge gives paths of 2 and 2.
  const auto base = loose_path(3, 2);
  const auto g = attach_two_paths(base, 3, 4, 3, 1);
  // u-path edges: {3,5,6}, {6,7,8}, {8,9,10}; v-path edge: {4,11,12}.
  const Edge e{6, 7, 8}, f{4, 11, 12};
  const auto swapped = swap_parts(g, e, {7, 8}, f, {11, 12});
  CHECK(is_isomorphic(swapped, attach_two_paths(base, 3, 4, 2, 2)));
  CHECK(swapped.m() == g.m());
}

TEST_CASE("swap_parts is an involution and validates its arguments") {
  const auto g = attach_two_paths(loose_path(3, 2), 3, 4, 3, 1);
  const Edge e{8, 9, 10}, f{4, 11, 12};
  const auto once = swap_parts(g, {6, 7, 8}, {7, 8}, f, {11, 12});
  const auto twice = swap_parts(once, {4, 7, 8}, {7, 8}, {6, 11, 12}, {11, 12});
  CHECK(twice == g);

  CHECK_THROWS_AS(swap_parts(g, e, {8, 9, 10}, f, {4, 11, 12}), TransformError);  // |U1| = k
  CHECK_THROWS_AS(swap_parts(g, e, {9}, f, {11, 12}), TransformError);            // size mismatch
  CHECK_THROWS_AS(swap_parts(g, {6, 7, 8}, {7}, e, {9}), TransformError);        // overlap
  CHECK_THROWS_AS(swap_parts(g, e, {4}, f, {11}), TransformError);                // 4 not in e
}

TEST_CASE("attach_path") {
  const auto edge = loose_path(3, 1);
  CHECK(attach_path(edge, 2, 1) == loose_path(3, 2));
  CHECK(attach_path(edge, 0, 0) == edge);
  CHECK_THROWS_AS(attach_path(edge, 3, 1), TransformError);

  std::mt19937 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 2 + trial % 4;
    const auto g = testing::random_connected(k, 3, rng);
    const auto p = static_cast<std::size_t>(trial % 5);
    const auto u = static_cast<Vertex>(rng() % g.n());
    const auto h = attach_path(g, u, p);
    CHECK(h.n() == g.n() + p * static_cast<std::size_t>(k - 1));
    CHECK(h.m() == g.m() + p);
    // G_u(p, q) = (G_u(p))_u(q): attaching in either order is isomorphic.
    CHECK(is_isomorphic(attach_path(attach_path(g, u, p), u, 2), attach_path(attach_path(g, u, 2), u, p), 64));
  }
}

TEST_CASE("attach_two_paths") {
  const auto edge = loose_path(3, 1);
  const auto fork = attach_two_paths(edge, 0, 1, 1, 1);
  CHECK(fork.m() == 3);
  CHECK(is_isomorphic(fork, loose_path(3, 3)));
  CHECK(is_isomorphic(fork, f3_family(1, 1, 0)));
  CHECK(attach_two_paths(edge, 0, 1, 0, 0) == edge);
  CHECK_THROWS_AS(attach_two_paths(edge, 1, 1, 1, 1), TransformError);
  CHECK_THROWS_AS(attach_two_paths(edge, 1, 5, 1, 1), TransformError);
  // (m-3, 1) on two pendant vertices of the last edge of P_2.
  CHECK(is_isomorphic(attach_two_paths(loose_path(3, 2), 3, 4, 3, 1), f3_family(1, 1, 3)));
}

TEST_CASE("is_reducible") {
  for (int k = 3; k <= 6; ++k) {
    for (int m = 1; m <= 6; ++m) CHECK(is_reducible(loose_path(k, m)));
  }
  CHECK_FALSE(is_reducible(h4_family(1)));
  for (int m = 3; m <= 6; ++m) CHECK_FALSE(is_reducible(loose_path(2, m)));
  CHECK_FALSE(is_reducible(d_prime_family(3, 5)));
  CHECK(is_reducible(d_prime_family(4, 5)));
}

TEST_CASE("reduce") {
  for (int k = 3; k <= 6; ++k) {
    for (int m = 1; m <= 6; ++m) CHECK(reduce(loose_path(k, m)) == loose_path(k - 1, m));
  }
  CHECK(is_isomorphic(reduce(d_prime_family(4, 6)), d_prime_family(3, 6)));
  CHECK_THROWS_AS(reduce(h4_family(1)), NotReducibleError);
  CHECK_THROWS_AS(reduce(loose_path(2, 3)), NotReducibleError);
  CHECK_THROWS_AS(reduce(two_edge_overlap(3, 2)), NotReducibleError);  // edges collapse
}

TEST_CASE("pendant choice in reduce does not change the result on hypertrees") {
  for (const char* name : {"P:4,5", "D:3,6", "D:5,4", "Dp:4,6", "Dp:6,5", "E3:1,2,3", "F3:0,2,2"}) {
    const auto g = expand(parse_family(name));
    CAPTURE(name);
    const auto a = reduce(g, PendantChoice::largest);
    const auto b = reduce(g, PendantChoice::smallest);
    CHECK(is_isomorphic(a, b, 64));
    CHECK(std::abs(spectral_radius(a).rho - spectral_radius(b).rho) <= 1e-9);
  }
}

TEST_CASE("pad_edges is undone by reduce") {
  for (const char* name : {"E3:1,2,2", "F3:1,1,2", "G3:1,1,0,1,3", "H4:2"}) {
    const auto g = expand(parse_family(name));
    for (int r = 1; r <= 3; ++r) {
      auto padded = pad_edges(g, r);
      CHECK(padded.k() == g.k() + r);
      CHECK(is_reducible(padded));
      for (int i = 0; i < r; ++i) padded = reduce(padded);
      CHECK(padded == g);
    }
  }
}

TEST_CASE("surgeries preserve edge count and uniformity") {
  std::mt19937 rng(73);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 40; ++trial) {
    const int k = 3 + trial % 2;
    const auto g = testing::random_connected(k, 4, rng, 0.6);
    const auto u = static_cast<Vertex>(rng() % g.n());
    const auto idx = rng() % g.m();
    auto e = g.edge(idx);
    if (std::find(e.begin(), e.end(), u) != e.end()) continue;
    try {
      const auto h = move_edges(g, {u, {{Edge(e.begin(), e.end()), e[rng() % e.size()]}}});
      CHECK(h.m() == g.m());
      CHECK(h.k() == g.k());
      ++checked;
    } catch (const TransformError&) {
    }
  }
  CHECK(checked > 10);
}
