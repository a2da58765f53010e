#pragma once

#include <sodium.h>

#include "maskstego/error.hpp"

namespace maskstego::detail {

inline void ensure_sodium() {
  static const int status = sodium_init();
  if (status < 0) throw Error(ErrorKind::internal, "libsodium failed to initialize");
}

}  // namespace maskstego::detail
