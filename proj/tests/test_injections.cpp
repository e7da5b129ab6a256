#include "doctest.h"

#include <random>

#include "simion/count.hpp"
#include "simion/injections.hpp"
#include "simion/text.hpp"

using namespace simion;

namespace {

Path P(std::string_view text) { return parse_path(text); }

}  // namespace

TEST_CASE("first_vertical_pair") {
  auto cut = first_vertical_pair(P("(0,0):E"), P("(2,0):NNE"), 1);
  REQUIRE(cut);
  CHECK(cut->p_vertex == Point{0, 0});
  CHECK(cut->q_vertex == Point{1, 0});
  CHECK(cut->p_index == 0);
  CHECK(cut->q_index == 1);
  CHECK(cut->distance == 1);

  cut = first_vertical_pair(P("(1,0):NE"), P("(1,0):NE"), -1);
  REQUIRE(cut);
  CHECK(cut->p_vertex == Point{1, 0});
  CHECK(cut->q_vertex == Point{0, 0});
  CHECK(cut->p_index == 0);
  CHECK(cut->q_index == 1);

  // q runs one row above p everywhere: vertical distance is always -1.
  CHECK_FALSE(first_vertical_pair(P("(1,0):EE"), P("(0,0):EE"), 1));
  // No shared column at all.
  CHECK_FALSE(first_vertical_pair(P("(0,0):E"), P("(3,4):NNN"), 1));

  // Southmost pair within the first qualifying column.
  cut = first_vertical_pair(P("(4,0):NNNN"), P("(5,0):NNNNN"), 1);
  REQUIRE(cut);
  CHECK(cut->p_vertex == Point{4, 0});
  CHECK(cut->q_vertex == Point{5, 0});
}

TEST_CASE("last_horizontal_pair") {
  auto cut = last_horizontal_pair(P("(0,0):EE"), P("(2,0):NN"), 1);
  REQUIRE(cut);
  CHECK(cut->p_vertex == Point{0, 1});
  CHECK(cut->q_vertex == Point{0, 0});
  CHECK(cut->p_index == 1);
  CHECK(cut->q_index == 2);
  CHECK(cut->distance == 1);

  cut = last_horizontal_pair(P("(1,0):NE"), P("(1,0):NE"), -1);
  REQUIRE(cut);
  CHECK(cut->p_vertex == Point{0, 0});
  CHECK(cut->q_vertex == Point{0, 1});

  // p entirely west of q.
  CHECK_FALSE(last_horizontal_pair(P("(2,0):NN"), P("(2,3):NN"), 1));
}

TEST_CASE("psi_forward swaps tails at the first common vertex") {
  const Path p = P("(1,0):NEE");
  const Path q = P("(2,0):ENN");
  const PathPair out = psi_forward(Shape{}, p, q);
  CHECK(out.first == P("(1,0):NE"));
  CHECK(out.second == P("(2,0):ENNE"));
  const auto back = psi_inverse(Shape{}, out);
  REQUIRE(back);
  CHECK(back->first == p);
  CHECK(back->second == q);

  // Meeting right after q's first step: the swap happens there.
  const PathPair early = psi_forward(Shape{}, P("(1,0):ENE"), P("(2,0):NEN"));
  CHECK(early.first == P("(1,0):EN"));
  CHECK(early.second == P("(2,0):NENE"));

  CHECK_THROWS_AS(psi_forward(Shape{}, P("(1,0):NEE"), P("(1,0):NE")),
                  std::invalid_argument);
  CHECK_THROWS_AS(psi_forward(make_shape({1}), P("(1,0):NEE"), q),
                  std::invalid_argument);
  CHECK_FALSE(psi_inverse(Shape{}, {P("(0,0):E"), P("(1,0):EEN")}));
}

TEST_CASE("phi_forward and phi_inverse") {
  const PathPair out = phi_forward(Shape{}, P("(0,0):E"), P("(2,0):NNE"));
  CHECK(out.first == P("(1,0):NE"));
  CHECK(out.second == P("(1,0):NE"));

  const PathPair other = phi_forward(Shape{}, P("(0,0):E"), P("(2,0):NEN"));
  CHECK(other.first == P("(1,0):EN"));
  CHECK(other.second == P("(1,0):NE"));

  const auto back = phi_inverse(Shape{}, {P("(1,0):NE"), P("(1,0):NE")});
  REQUIRE(back);
  CHECK(back->first == P("(0,0):E"));
  CHECK(back->second == P("(2,0):NNE"));

  // The second path never rises above the first: not in the image.
  CHECK_FALSE(phi_inverse(Shape{}, {P("(1,0):NE"), P("(1,0):EN")}));
  CHECK_FALSE(phi_inverse(Shape{}, {P("(2,0):NNEE"), P("(2,0):EENN")}));

  // A -1 cut whose reconstruction would cross the shape.
  CHECK(first_vertical_pair(P("(1,0):EN"), P("(1,0):EN"), -1));
  CHECK_FALSE(phi_inverse(make_shape({1}), {P("(1,0):EN"), P("(1,0):EN")}));

  CHECK_THROWS_AS(phi_forward(Shape{}, P("(0,0):E"), P("(1,0):NE")),
                  std::invalid_argument);
}

TEST_CASE("phibar_forward and phibar_inverse") {
  const Path p = P("(0,0):EE");
  const Path q = P("(2,0):NN");
  const PathPair out = phibar_forward(Shape{}, p, q);
  CHECK(out.first == P("(1,0):NE"));
  CHECK(out.second == P("(1,0):NE"));

  const auto back = phibar_inverse(Shape{}, out);
  REQUIRE(back);
  CHECK(back->first == p);
  CHECK(back->second == q);

  CHECK_FALSE(phibar_inverse(Shape{}, {P("(1,0):NE"), P("(1,0):EN")}));
  CHECK_THROWS_AS(phibar_forward(Shape{}, P("(0,0):E"), P("(2,0):NN")),
                  std::invalid_argument);
}

TEST_CASE("outputs land in the codomain on a hand-built larger instance") {
  const Shape shape = make_shape({2, 1});
  // N(2,4) x N(4,2) -> N(3,3)^2
  const Path p = P("(2,0):ENEEEN");
  const Path q = P("(4,0):ENNNEN");
  REQUIRE(is_valid_path(shape, p));
  REQUIRE(is_valid_path(shape, q));
  const PathPair out = phibar_forward(shape, p, q);
  for (const Path* path : {&out.first, &out.second}) {
    CHECK(path->start() == Point{3, 0});
    CHECK(path->end() == Point{0, 3});
    CHECK(is_valid_path(shape, *path));
  }
  const auto back = phibar_inverse(shape, out);
  REQUIRE(back);
  CHECK(back->first == p);
  CHECK(back->second == q);
}

TEST_CASE("random round trips beyond the exhaustive sweep") {
  std::mt19937 rng(20261018);
  const std::vector<Shape> shapes = {Shape{}, make_shape({1}),
                                     make_shape({3, 2}), make_shape({2, 2, 1}),
                                     make_shape({4, 1, 1})};
  auto pick = [&](const std::vector<Path>& paths) -> const Path& {
    return paths[std::uniform_int_distribution<std::size_t>(
        0, paths.size() - 1)(rng)];
  };
  for (const Shape& shape : shapes) {
    for (int m = 3; m <= 6; ++m) {
      for (int n = 3; n <= 6; ++n) {
        CAPTURE(format_shape(shape));
        CAPTURE(m);
        CAPTURE(n);
        const auto psi_p = enumerate_paths(shape, m, n + 1);
        const auto psi_q = enumerate_paths(shape, m + 1, n);
        const auto phi_p = enumerate_paths(shape, m - 1, n);
        const auto phi_q = enumerate_paths(shape, m + 1, n);
        const auto bar_p = enumerate_paths(shape, m - 1, n + 1);
        const auto bar_q = enumerate_paths(shape, m + 1, n - 1);
        for (int trial = 0; trial < 40; ++trial) {
          if (!psi_p.empty() && !psi_q.empty()) {
            const Path& p = pick(psi_p);
            const Path& q = pick(psi_q);
            const auto out = psi_forward(shape, p, q);
            CHECK(is_valid_path(shape, out.first));
            CHECK(is_valid_path(shape, out.second));
            CHECK(psi_inverse(shape, out) == std::optional(PathPair{p, q}));
          }
          if (!phi_p.empty() && !phi_q.empty()) {
            const Path& p = pick(phi_p);
            const Path& q = pick(phi_q);
            const auto out = phi_forward(shape, p, q);
            CHECK(phi_inverse(shape, out) == std::optional(PathPair{p, q}));
          }
          if (!bar_p.empty() && !bar_q.empty()) {
            const Path& p = pick(bar_p);
            const Path& q = pick(bar_q);
            const auto out = phibar_forward(shape, p, q);
            CHECK(phibar_inverse(shape, out) == std::optional(PathPair{p, q}));
          }
        }
      }
    }
  }
}
