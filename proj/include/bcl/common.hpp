#pragma once

#include <stdexcept>
#include <string>

namespace bcl {

inline constexpr const char* kVersion = "0.1.0";

// Error taxonomy shared across the library. Each named failure mode gets its
// own type so call sites (and tests) can catch precisely.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define BCL_DEFINE_ERROR(Name)                                 \
  struct Name : Error {                                        \
    explicit Name(const std::string& msg) : Error(#Name ": " + msg) {} \
  }

BCL_DEFINE_ERROR(NotSymmetric);
BCL_DEFINE_ERROR(NoConvergence);
BCL_DEFINE_ERROR(DomainExceeded);
BCL_DEFINE_ERROR(OutOfChart);
BCL_DEFINE_ERROR(IllConditioned);
BCL_DEFINE_ERROR(MissingConnectionChart);
BCL_DEFINE_ERROR(FeedInconsistent);
BCL_DEFINE_ERROR(FramePole);
BCL_DEFINE_ERROR(FocalLevel);
BCL_DEFINE_ERROR(BadParameters);
BCL_DEFINE_ERROR(NotRepresentable);
BCL_DEFINE_ERROR(NearFocal);
BCL_DEFINE_ERROR(DegenerateNormal);
BCL_DEFINE_ERROR(UnknownExample);
BCL_DEFINE_ERROR(BadConfig);
BCL_DEFINE_ERROR(NotAScan);

#undef BCL_DEFINE_ERROR

}  // namespace bcl
