#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

namespace qcomm_test {

const qcomm::Session& shared_session() {
  static std::unique_ptr<qcomm::Session> s = qcomm::build_session(3, true);
  return *s;
}

const qcomm::Session& shared_session5() {
  static std::unique_ptr<qcomm::Session> s = qcomm::build_session(5, false);
  return *s;
}

}  // namespace qcomm_test
