#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "wfock/rational.hpp"

namespace wfock {

class DegreeBoundError : public std::runtime_error {
 public:
  explicit DegreeBoundError(const std::string& what) : std::runtime_error(what) {}
};

class PoleAtZeroError : public std::runtime_error {
 public:
  PoleAtZeroError() : std::runtime_error("reconstructed function has a pole at t = 0") {}
};

/// One sample of a univariate rational function.
using RationalSample = std::pair<Rational, Rational>;

/// Reconstructs the rational function of numerator/denominator degree at most
/// (num_degree_bound, den_degree_bound) through the samples by exact Cauchy
/// interpolation and evaluates it at t = 0.
///
/// The linear system uses num_degree_bound + den_degree_bound + 1 samples; at
/// least one extra sample must be supplied and every remaining sample is used
/// as a held-out consistency check, so undershooting the true degrees is
/// detected rather than silently misreconstructed.
Rational limit_at_zero(const std::vector<RationalSample>& samples, int num_degree_bound,
                       int den_degree_bound);

}  // namespace wfock
