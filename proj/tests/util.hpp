#pragma once

#include <gtest/gtest.h>

#include "pslekr/error.hpp"

template <class F>
void expect_error(pslekr::ErrorKind kind, F&& f) {
  try {
    f();
    ADD_FAILURE() << "no error thrown";
  } catch (const pslekr::Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}
