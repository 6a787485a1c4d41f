#pragma once

// Exact integer geometry of the infinite grid. All symmetry-related points
// (axis anchors, rotation centers) live in doubled coordinates so that edge
// midpoints and cell centers are exact integers too.

#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "gridpark/errors.hpp"

namespace gridpark {

using i64 = std::int64_t;

struct Node {
  i64 x = 0;
  i64 y = 0;
  friend auto operator<=>(const Node&, const Node&) = default;
};

struct Vec2 {
  i64 dx = 0;
  i64 dy = 0;
  friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

inline Node operator+(Node n, Vec2 v) { return {n.x + v.dx, n.y + v.dy}; }
inline Vec2 operator-(Node a, Node b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(i64 k, Vec2 v) { return {k * v.dx, k * v.dy}; }
inline Vec2 operator-(Vec2 v) { return {-v.dx, -v.dy}; }

// Fixed absolute neighbor order; canonical frames reorder this when one exists.
inline constexpr std::array<Vec2, 4> kUnitSteps{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

i64 manhattan_distance(Node u, Node v);

// A point at integer or half-integer coordinates, stored doubled.
struct HalfGridPoint {
  i64 x2 = 0;
  i64 y2 = 0;
  friend auto operator<=>(const HalfGridPoint&, const HalfGridPoint&) = default;

  static HalfGridPoint from_node(Node n) { return {2 * n.x, 2 * n.y}; }
  bool is_node() const { return x2 % 2 == 0 && y2 % 2 == 0; }
  Node to_node() const { return {x2 / 2, y2 / 2}; }
};

// Doubled-coordinate Manhattan distance (the exact metric used for
// "farthest from c" decisions).
inline i64 manhattan_distance2(HalfGridPoint a, HalfGridPoint b) {
  return std::llabs(a.x2 - b.x2) + std::llabs(a.y2 - b.y2);
}

enum class AxisKind { Horizontal, Vertical, DiagRising, DiagFalling };

// A grid symmetry axis. The line is the solution set of one linear form in
// doubled coordinates:
//   Horizontal:  y2 == offset2
//   Vertical:    x2 == offset2
//   DiagRising:  y2 - x2 == offset2
//   DiagFalling: y2 + x2 == offset2
struct Axis {
  AxisKind kind = AxisKind::Horizontal;
  i64 offset2 = 0;
  friend auto operator<=>(const Axis&, const Axis&) = default;

  // Absolute doubled-coordinate offset perpendicular to the axis.
  i64 distance2(Node n) const;
  bool contains(Node n) const { return distance2(n) == 0; }
  HalfGridPoint reflect2(HalfGridPoint p) const;
  Node reflect(Node n) const;
  // Whether reflection maps the node lattice to itself.
  bool preserves_lattice() const;
};

enum class D4 { R0, R90, R180, R270, FH, FV, FD, FA };

// Lattice isometry: a D4 element acting about a doubled-coordinate center.
struct Isometry {
  D4 elem = D4::R0;
  HalfGridPoint center{};
  friend auto operator<=>(const Isometry&, const Isometry&) = default;

  HalfGridPoint apply2(HalfGridPoint p) const;
  Node apply(Node n) const;
  bool maps_nodes_to_nodes() const;
  bool is_identity() const { return elem == D4::R0; }
  bool is_rotation() const { return elem == D4::R90 || elem == D4::R180 || elem == D4::R270; }
  bool is_reflection() const {
    return elem == D4::FH || elem == D4::FV || elem == D4::FD || elem == D4::FA;
  }
  int rotation_angle() const;  // 90/180/270, 0 otherwise
  Axis reflection_axis() const;
  Isometry inverse() const;
};

// Composition of two isometries sharing a center.
Isometry compose(const Isometry& a, const Isometry& b);

// Closed axis-aligned rectangle of grid nodes.
struct Rect {
  Node min{};
  Node max{};
  friend auto operator<=>(const Rect&, const Rect&) = default;

  i64 width() const { return max.x - min.x + 1; }   // node count along x
  i64 height() const { return max.y - min.y + 1; }  // node count along y
  i64 node_count() const { return width() * height(); }
  bool is_square() const { return width() == height(); }
  bool contains(Node n) const {
    return n.x >= min.x && n.x <= max.x && n.y >= min.y && n.y <= max.y;
  }
  HalfGridPoint center2() const { return {min.x + max.x, min.y + max.y}; }
  // Corner order: (min,min), (max.x,min.y), (min.x,max.y), (max,max).
  std::array<Node, 4> corners() const;
  Rect expanded(i64 margin) const {
    return {{min.x - margin, min.y - margin}, {max.x + margin, max.y + margin}};
  }
};

Rect compute_mer(const std::vector<Node>& occupied);

}  // namespace gridpark
