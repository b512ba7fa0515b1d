#pragma once

#include <string>

#include "bacfi/int_matrix.hpp"
#include "bacfi/surface.hpp"

namespace bacfi {

/// X = (1 1; 0 1), Y = (1 0; 1 1).
IntMatrix sl2_x();
IntMatrix sl2_y();
IntMatrix eval_word(const std::string& word);

/// Lexicographically least rotation (X < Y).
std::string canonical_rotation(const std::string& word);
/// Exchanges X and Y: the class of the matrix conjugated by (0 1; 1 0).
std::string swap_letters(const std::string& word);
/// Run-length form, e.g. "XXYXXY" -> "X^2YX^2Y".
std::string compact_word(const std::string& word);

struct XYWord {
  std::string word;      // canonical rotation
  IntMatrix conjugator;  // P with eval_word(word) = P M P^-1
};

/// Positive XY word of a hyperbolic element of SL2(Z), canonical up to
/// rotation. Throws NotSL2 or TraceTooSmall.
XYWord xy_word(const IntMatrix& m);

struct TorusWord {
  XYWord word;
  IntMatrix h1;                  // monodromy matrix in the oriented basis
  bool orientation_flipped;      // basis was conjugated by diag(1, -1)
  std::string mirror_word;       // canonical word of the opposite orientation
};

/// Word of the monodromy of a genus-one surface, with the H1 basis oriented
/// by holonomy (positive period determinant). Throws NotGenusOne, TraceTooSmall.
TorusWord torus_word(const BacfiSurface& s);

}  // namespace bacfi
