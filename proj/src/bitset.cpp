#include "localdeg/bitset.hpp"

#include <bit>

#include "localdeg/error.hpp"

namespace localdeg {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NonAssociative: return "NonAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NoInverse: return "NoInverse";
    case Errc::NotLatinSquare: return "NotLatinSquare";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotAbelian: return "NotAbelian";
    case Errc::NoRootOfUnity: return "NoRootOfUnity";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::NoEmbedding: return "NoEmbedding";
    case Errc::ParameterMismatch: return "ParameterMismatch";
    case Errc::UnsupportedDegree: return "UnsupportedDegree";
    case Errc::Ramified: return "Ramified";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::NoCubeRoot: return "NoCubeRoot";
    case Errc::DivisionFailure: return "DivisionFailure";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::size_t Bitset::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Bitset::is_subset_of(const Bitset& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

Bitset& Bitset::operator&=(const Bitset& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::vector<std::uint32_t> Bitset::elements() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t Bitset::hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace localdeg
