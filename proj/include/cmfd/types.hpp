#pragma once

#include <cmath>

namespace cmfd {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
inline double norm(const Vec2& v) { return std::hypot(v.x, v.y); }

// (x, then y) ordering, used to pick the canonical endpoint of a match pair
inline bool lex_less(const Vec2& a, const Vec2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// Axis-aligned pixel rectangle, inclusive of (x, y), exclusive of (x+w, y+h).
struct Rect {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;
};

inline bool rects_overlap(const Rect& a, const Rect& b) {
    return a.x < b.x + b.w && b.x < a.x + a.w && a.y < b.y + b.h && b.y < a.y + a.h;
}

}  // namespace cmfd
