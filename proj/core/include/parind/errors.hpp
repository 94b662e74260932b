#pragma once

#include <stdexcept>
#include <string>

namespace parind {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NonPrimeError : Error { using Error::Error; };
struct DegreeTooLargeError : Error { using Error::Error; };
struct NotInGroupError : Error { using Error::Error; };
struct TooLargeError : Error { using Error::Error; };
struct DomainMismatchError : Error { using Error::Error; };
struct NotSubgroupError : Error { using Error::Error; };
struct NotRegularError : Error { using Error::Error; };
struct LeviMismatchError : Error { using Error::Error; };
struct ProjectorRankMismatchError : Error { using Error::Error; };
struct RelationMismatchError : Error { using Error::Error; };
struct BasisExpressFailureError : Error { using Error::Error; };
struct ParameterMismatchError : Error { using Error::Error; };
struct ZeroScalarError : Error { using Error::Error; };
struct ZeroCharacterValueError : Error { using Error::Error; };
struct ClosureIncompleteError : Error { using Error::Error; };
struct CacheError : Error { using Error::Error; };

}  // namespace parind
