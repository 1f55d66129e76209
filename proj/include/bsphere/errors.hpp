#pragma once

#include <stdexcept>
#include <string>

namespace bsphere {

/// Malformed text input (truth-table files, ANF text, generator matrices, code maps).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A generator matrix whose rows are linearly dependent over F2.
class RankDeficientError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A request that would exceed a documented size cap (degree, window, expansion or work budget).
class BudgetExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace bsphere
