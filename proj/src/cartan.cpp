#include "alcove/cartan.hpp"

#include <cctype>
#include <stdexcept>

namespace alcove {

static void check_rank(Series s, int r) {
  bool ok = false;
  switch (s) {
    case Series::A: ok = r >= 1; break;
    case Series::B: ok = r >= 2; break;
    case Series::C: ok = r >= 2; break;
    case Series::D: ok = r >= 3; break;
    case Series::E: ok = r >= 6 && r <= 8; break;
    case Series::F: ok = r == 4; break;
    case Series::G: ok = r == 2; break;
  }
  if (!ok)
    throw std::invalid_argument("invalid rank " + std::to_string(r) + " for series " +
                                std::string(1, static_cast<char>(s)));
}

CartanType::CartanType(Series s, int r) : series(s), rank(r) { check_rank(s, r); }

CartanType CartanType::parse(const std::string& text) {
  size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i == text.size()) throw std::invalid_argument("empty type");
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
  if (c < 'A' || c > 'G') throw std::invalid_argument("unknown series '" + text + "'");
  ++i;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  size_t pos = 0;
  int r = 0;
  try {
    r = std::stoi(text.substr(i), &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("missing rank in '" + text + "'");
  }
  if (i + pos != text.size()) throw std::invalid_argument("trailing input in '" + text + "'");
  return CartanType(static_cast<Series>(c), r);
}

std::string CartanType::name() const {
  return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

CartanType CartanType::canonical() const {
  if (series == Series::C && rank == 2) return CartanType(Series::B, 2);
  if (series == Series::D && rank == 3) return CartanType(Series::A, 3);
  return *this;
}

IntMatrix cartan_matrix(const CartanType& t) {
  const int n = t.rank;
  IntMatrix c(n, n);
  for (int i = 0; i < n; ++i) c.at(i, i) = 2;
  auto bond = [&](int i, int j) {  // single edge between nodes i, j (0-based)
    c.at(i, j) = -1;
    c.at(j, i) = -1;
  };
  switch (t.series) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      c.at(n - 1, n - 2) = -2;  // last simple root is short
      break;
    case Series::C:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      c.at(n - 2, n - 1) = -2;  // last simple root is long
      break;
    case Series::D:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case Series::E:
      bond(0, 2);
      bond(2, 3);
      bond(3, 4);
      bond(4, 5);
      bond(1, 3);
      if (n >= 7) bond(5, 6);
      if (n >= 8) bond(6, 7);
      break;
    case Series::F:
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      c.at(2, 1) = -2;  // roots 3, 4 are short
      break;
    case Series::G:
      c.at(0, 1) = -3;  // first simple root is short
      c.at(1, 0) = -1;
      break;
  }
  return c;
}

}  // namespace alcove
