#include "bacfi/builtin.hpp"

#include "bacfi/error.hpp"

namespace bacfi::builtin {
namespace {

// Each block is mapped to itself by x -> x - 1, wrapping its minimum to its maximum.
void step_down(std::vector<int>& perm, int first, int size) {
  for (int k = 0; k < size; ++k) perm[first + k] = first + (k == 0 ? size - 1 : k - 1);
}

}  // namespace

BacfiSurface example1(int p, int q, int r, int s) {
  // squares: 0 = bottom-left, 1 = bottom-right, 2 = top-left, 3 = top-right
  return BacfiSurface::make({1, 0, 3, 2}, {2, 3, 0, 1}, {r, r, p, p}, {q, s, q, s});
}

BacfiSurface example2() {
  std::vector<int> east(12), north(12);
  for (int i = 0; i < 6; ++i) {
    east[i] = (i + 1) % 6;
    east[6 + i] = 6 + (i + 1) % 6;
    north[i] = 6 + i;
    north[6 + i] = (i + 4) % 6;
  }
  return BacfiSurface::make(east, north, std::vector<int>(12, 1), std::vector<int>(12, 1));
}

BacfiSurface example3(int q, int r) { return BacfiSurface::make({0}, {0}, {q}, {r}); }

BacfiSurface example4(int q, int r) {
  return BacfiSurface::make({1, 0, 2}, {1, 2, 0}, {q, q, r}, {1, 1, 1});
}

BacfiSurface pingpong(int n, int q, int r) {
  if (n < 1) throw Error(ErrorKind::MalformedDocument, "pingpong needs n >= 1");
  const int squares = 4 * n - 1;
  std::vector<int> east(squares), north(squares);
  std::vector<int> h_exp(squares, 1), v_exp(squares, 1);

  step_down(east, 0, 2);
  for (int t = 1; t < n; ++t) step_down(east, 4 * t - 2, 4);
  step_down(east, squares - 1, 1);
  h_exp[0] = h_exp[1] = q;
  h_exp[squares - 1] = r;

  for (int t = 0; t + 1 < n; ++t) step_down(north, 4 * t, 4);
  step_down(north, squares - 3, 3);

  return BacfiSurface::make(east, north, h_exp, v_exp);
}

}  // namespace bacfi::builtin
