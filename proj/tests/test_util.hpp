#pragma once

#include <gtest/gtest.h>

#include "core/error.hpp"

// Expects body to throw fmca::Error with the given code.
#define EXPECT_FMCA_ERROR(body, expected_code)                                  \
  do {                                                                          \
    try {                                                                       \
      body;                                                                     \
      ADD_FAILURE() << "no exception from " #body;                              \
    } catch (const fmca::Error& e) {                                            \
      EXPECT_EQ(e.code(), expected_code) << e.what();                           \
    }                                                                           \
  } while (0)
