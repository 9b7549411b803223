#ifndef ICNLOWPAN_TESTS_TEST_COMMON_HPP
#define ICNLOWPAN_TESTS_TEST_COMMON_HPP

#include "doctest.h"

#include "generators.hpp"

/// Checks that \p expr throws icnlowpan::Error with code \p errc.
#define CHECK_ERRC(expr, errc)                                              \
  do {                                                                      \
    bool caught_ = false;                                                   \
    try {                                                                   \
      (void)(expr);                                                         \
    }                                                                       \
    catch (const ::icnlowpan::Error& e_) {                                  \
      caught_ = true;                                                       \
      CHECK_MESSAGE(e_.code() == (errc), e_.what());                        \
    }                                                                       \
    CHECK_MESSAGE(caught_, "expected " << ::icnlowpan::errcName(errc));     \
  } while (false)

#endif // ICNLOWPAN_TESTS_TEST_COMMON_HPP
