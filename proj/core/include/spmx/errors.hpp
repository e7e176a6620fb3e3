#pragma once

#include <stdexcept>
#include <string>

namespace spmx {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPermutationMatrix : Error {
  using Error::Error;
};

struct NotSPermutation : Error {
  using Error::Error;
};

struct NotSudoku : Error {
  using Error::Error;
};

struct NotDisjoint : Error {
  NotDisjoint(int first_member, int second_member)
      : Error("family members " + std::to_string(first_member) + " and " +
              std::to_string(second_member) + " are not disjoint"),
        first(first_member),
        second(second_member) {}
  int first;
  int second;
};

struct IncompleteFamily : Error {
  using Error::Error;
};

struct SizeMismatch : Error {
  using Error::Error;
};

struct ShapeError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct TooLarge : Error {
  using Error::Error;
};

struct Unsupported : Error {
  using Error::Error;
};

struct InvarianceViolated : Error {
  using Error::Error;
};

}  // namespace spmx
