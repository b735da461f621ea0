#include <gtest/gtest.h>

#include "glab/vertex_set.hpp"

using namespace glab;

TEST(VertexSet, InsertEraseContains) {
  VertexSet s(5);
  EXPECT_TRUE(s.empty());
  s.insert(0);
  s.insert(3);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(1));
  s.erase(3);
  EXPECT_EQ(s.to_vector(), std::vector<Vertex>{0});
}

TEST(VertexSet, RejectsOutOfUniverse) {
  VertexSet s(3);
  EXPECT_THROW(s.insert(3), usage_error);
  EXPECT_THROW(VertexSet::from_mask(0b1000, 3), usage_error);
  EXPECT_THROW(VertexSet(65), unsupported_error);
}

TEST(VertexSet, SetAlgebra) {
  VertexSet a(6, {0, 1, 2}), b(6, {2, 3});
  EXPECT_EQ((a & b).to_vector(), std::vector<Vertex>{2});
  EXPECT_EQ((a | b).size(), 4u);
  EXPECT_EQ((a - b).to_vector(), (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(a.complement().to_vector(), (std::vector<Vertex>{3, 4, 5}));
  EXPECT_TRUE(VertexSet(6, {1}).is_subset_of(a));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_THROW(a | VertexSet(5), usage_error);
}

TEST(VertexSet, FullUniverseOf64) {
  auto s = VertexSet::full(64);
  EXPECT_EQ(s.size(), 64u);
  EXPECT_TRUE(s.contains(63));
  EXPECT_TRUE(s.complement().empty());
}

TEST(VertexSet, ToStringAndIteration) {
  VertexSet s(8, {7, 2, 0});
  EXPECT_EQ(s.to_string(), "{0,2,7}");
  std::vector<Vertex> seen;
  for (Vertex v : s) seen.push_back(v);
  EXPECT_EQ(seen, (std::vector<Vertex>{0, 2, 7}));
  EXPECT_EQ(VertexSet(3).to_string(), "{}");
}
