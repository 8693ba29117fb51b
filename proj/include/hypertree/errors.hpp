#pragma once

#include <stdexcept>
#include <string>

namespace hypertree {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HYPERTREE_ERROR(NAME)          \
  class NAME : public Error {          \
   public:                             \
    using Error::Error;                \
  };

// construction / input
HYPERTREE_ERROR(ParamError)
HYPERTREE_ERROR(ArityError)
HYPERTREE_ERROR(RangeError)
HYPERTREE_ERROR(DuplicateEdgeError)
HYPERTREE_ERROR(ParseError)

// preconditions of individual operations
HYPERTREE_ERROR(PreconditionError)
HYPERTREE_ERROR(IsolatedVertexError)
HYPERTREE_ERROR(EmptyHypergraphError)
HYPERTREE_ERROR(NotAHypertreeError)
HYPERTREE_ERROR(NotChainConnectedError)
HYPERTREE_ERROR(NotSemicycleFreeError)
HYPERTREE_ERROR(NotLHypertreeError)
HYPERTREE_ERROR(HypothesisError)
HYPERTREE_ERROR(FreshVertexMissing)
HYPERTREE_ERROR(NotEdgeMinimalAfterExtension)
HYPERTREE_ERROR(ConstraintInfeasible)

// resource guards and internal checks
HYPERTREE_ERROR(SizeError)
HYPERTREE_ERROR(BudgetExceeded)
HYPERTREE_ERROR(OverflowError)
HYPERTREE_ERROR(InternalInvariantError)

#undef HYPERTREE_ERROR

}  // namespace hypertree
