#pragma once

namespace liftproj {
struct Matrix;
struct SymMatrix;
}  // namespace liftproj
