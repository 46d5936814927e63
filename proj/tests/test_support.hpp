#pragma once

#include "qcomm/session.hpp"

namespace qcomm_test {

/// One order-3 session with the derivative extension, built on first
/// use and shared by every suite; building it is the expensive part of
/// the whole test run.
const qcomm::Session& shared_session();

/// One order-5 session, hopf layer only. Its construction sweeps the
/// degree-4 cyclotomic arithmetic through every algebra gate, so the
/// suites that need a non-default order share this single build.
const qcomm::Session& shared_session5();

}  // namespace qcomm_test
