#pragma once

#include <stdexcept>
#include <string>

namespace plstab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define PLSTAB_DEFINE_ERROR(Name) \
  struct Name : Error {           \
    using Error::Error;           \
  }

// lcf_core
PLSTAB_DEFINE_ERROR(NonLogConcaveInput);
PLSTAB_DEFINE_ERROR(EmptySupport);
PLSTAB_DEFINE_ERROR(NonUniformGrid);
PLSTAB_DEFINE_ERROR(LevelAboveMax);

// legendre_supconv
PLSTAB_DEFINE_ERROR(SlopeRangeTooNarrow);
PLSTAB_DEFINE_ERROR(GridTooLarge);
PLSTAB_DEFINE_ERROR(WeightSumInvalid);
PLSTAB_DEFINE_ERROR(NotDecreasing);
PLSTAB_DEFINE_ERROR(NotLogConcave);

// convex_geometry
PLSTAB_DEFINE_ERROR(MixedVariants);
PLSTAB_DEFINE_ERROR(DegenerateBody);
PLSTAB_DEFINE_ERROR(PreconditionViolated);
PLSTAB_DEFINE_ERROR(OverlappingInput);

// stability_analysis
PLSTAB_DEFINE_ERROR(EpsilonOutOfRange);
PLSTAB_DEFINE_ERROR(OmegaNotBelowOne);
PLSTAB_DEFINE_ERROR(DomainViolation);
PLSTAB_DEFINE_ERROR(HypothesisViolated);
PLSTAB_DEFINE_ERROR(HypothesisNotMet);
PLSTAB_DEFINE_ERROR(ConfigInvalid);

// harness
PLSTAB_DEFINE_ERROR(ParseError);
PLSTAB_DEFINE_ERROR(EmptyInput);

#undef PLSTAB_DEFINE_ERROR

}  // namespace plstab
