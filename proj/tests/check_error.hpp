#pragma once

#include <doctest.h>

#include "coalition/error.hpp"

#define CHECK_ERROR(expr, expected_code)                                    \
  do {                                                                      \
    bool thrown_ = false;                                                   \
    try {                                                                   \
      (void)(expr);                                                         \
    } catch (const coalition::Error& e_) {                                  \
      thrown_ = true;                                                       \
      CHECK_MESSAGE(e_.code() == (expected_code), std::string(e_.what()));               \
    }                                                                       \
    CHECK_MESSAGE(thrown_, "expected " #expected_code " from " #expr);      \
  } while (false)
