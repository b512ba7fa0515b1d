#pragma once

#include "bacfi/surface.hpp"

namespace bacfi::builtin {

/// 2x2 torus (cross on a sphere with four cone points). Rows carry the
/// horizontal exponents (top p, bottom r), columns the vertical ones (q, s).
BacfiSurface example1(int p, int q, int r, int s);

/// The 12-square torus: bottom row 0..5, top row 6..11, the top of column i
/// glued to the bottom of column i-2.
BacfiSurface example2();

/// One square, horizontal exponent q, vertical exponent r.
BacfiSurface example3(int q, int r);

/// Three squares a=0, b=1, c=2: horizontal cylinders {a,b} (exponent q) and
/// {c} (exponent r), one vertical cylinder a -> b -> c -> a.
BacfiSurface example4(int q, int r);

/// Even ping-pong with 4n-1 squares. East and north both step down inside
/// consecutive blocks of squares; horizontal blocks have sizes 2,4,...,4,1
/// (exponents q,1,...,1,r), vertical blocks 4,...,4,3 (exponent 1).
BacfiSurface pingpong(int n, int q, int r);

}  // namespace bacfi::builtin
