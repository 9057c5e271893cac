// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string_view>

#include "mpk/precond/ilu0.hpp"

namespace mpk {

enum class PrecondMode { none, ilu0_full, ilu0_mixed };

[[nodiscard]] constexpr std::string_view to_string(PrecondMode m) noexcept {
  switch (m) {
    case PrecondMode::none: return "none";
    case PrecondMode::ilu0_full: return "ilu0";
    case PrecondMode::ilu0_mixed: return "ilu0-mixed";
  }
  return "?";
}

[[nodiscard]] constexpr std::optional<PrecondMode> parse_precond_mode(std::string_view s) noexcept {
  for (auto m : {PrecondMode::none, PrecondMode::ilu0_full, PrecondMode::ilu0_mixed}) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

/// M ~ A; apply solves M z = r, apply_adjoint solves M^H z = r.
template <class S>
class Preconditioner {
 public:
  virtual ~Preconditioner() = default;
  virtual void apply(std::span<const S> r, std::span<S> z) const = 0;
  virtual void apply_adjoint(std::span<const S> r, std::span<S> z) const = 0;
};

template <class S>
class IdentityPreconditioner final : public Preconditioner<S> {
 public:
  void apply(std::span<const S> r, std::span<S> z) const override { copy<S>(r, z); }
  void apply_adjoint(std::span<const S> r, std::span<S> z) const override { copy<S>(r, z); }
};

template <class S>
class Ilu0Preconditioner final : public Preconditioner<S> {
 public:
  explicit Ilu0Preconditioner(const CsrMatrix<S>& a) : factors_(ilu0_factorize(a)) {}
  explicit Ilu0Preconditioner(IluFactors<S> f) : factors_(std::move(f)) {}

  void apply(std::span<const S> r, std::span<S> z) const override { ilu0_apply<S>(factors_, r, z); }
  void apply_adjoint(std::span<const S> r, std::span<S> z) const override {
    ilu0_apply_adjoint<S>(factors_, r, z);
  }
  [[nodiscard]] const IluFactors<S>& factors() const noexcept { return factors_; }

 private:
  IluFactors<S> factors_;
};

/// Factors held in binary64; substitutions run in binary64 regardless of S.
template <class S>
class MixedIlu0Preconditioner final : public Preconditioner<S> {
 public:
  explicit MixedIlu0Preconditioner(const CsrMatrix<S>& a) : factors_(ilu0_factorize_demoted(a)) {}

  void apply(std::span<const S> r, std::span<S> z) const override {
    ilu0_apply_mixed<S>(factors_, r, z);
  }
  void apply_adjoint(std::span<const S> r, std::span<S> z) const override {
    ilu0_apply_mixed_adjoint<S>(factors_, r, z);
  }
  [[nodiscard]] const IluFactors<binary64_t<S>>& factors() const noexcept { return factors_; }

 private:
  IluFactors<binary64_t<S>> factors_;
};

/// nullptr for PrecondMode::none: solvers then take the unpreconditioned path.
template <class S>
[[nodiscard]] std::unique_ptr<Preconditioner<S>> make_preconditioner(PrecondMode mode,
                                                                     const CsrMatrix<S>& a) {
  switch (mode) {
    case PrecondMode::none: return nullptr;
    case PrecondMode::ilu0_full: return std::make_unique<Ilu0Preconditioner<S>>(a);
    case PrecondMode::ilu0_mixed: return std::make_unique<MixedIlu0Preconditioner<S>>(a);
  }
  return nullptr;
}

}  // namespace mpk
