#pragma once

#include <catch2/catch_amalgamated.hpp>

#include "pleth/symfunc.hpp"

namespace Catch {
template <>
struct StringMaker<pleth::RatFunc> {
  static std::string convert(const pleth::RatFunc& f) { return f.str(); }
};
template <>
struct StringMaker<pleth::SymFunc> {
  static std::string convert(const pleth::SymFunc& f) { return f.str(); }
};
template <>
struct StringMaker<pleth::Partition> {
  static std::string convert(const pleth::Partition& p) { return p.str(); }
};
}  // namespace Catch
