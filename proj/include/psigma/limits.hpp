#pragma once

namespace psigma {

/// Size caps checked before any enumeration starts.
struct Limits {
  int max_n = 10;
  int oracle_max_n = 5;
  int oracle_max_k = 3;
};

} // namespace psigma
