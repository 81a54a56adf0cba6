#pragma once

#include <cstdint>
#include <vector>

#include "recta/action.hpp"
#include "recta/golay.hpp"
#include "recta/perm.hpp"
#include "recta/perm_group.hpp"

namespace recta {

// Generator words for the Mathieu groups, committed as data. The degree-24
// generators act on {0..22, 23} read as the projective line over GF(23)
// with 23 standing for the point at infinity; the first three are the
// linear-fractional maps y -> y+1, y -> 2y, y -> -1/y, and the fourth maps
// y -> y^3/9 on squares and y -> 9y^3 on non-squares. That labeling matches
// the quadratic-residue construction of golay24(), so the generators
// stabilise the code; every accessor re-verifies order, transitivity degree
// and code preservation the first time it is used.
namespace mathieu_data {
constexpr std::uint32_t kM24A[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 0, 23};
constexpr std::uint32_t kM24B[] = {0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23};
constexpr std::uint32_t kM24C[] = {23, 22, 11, 15, 17, 9, 19, 13, 20, 5, 16, 2, 21, 7, 18, 3, 10, 4, 14, 6, 8, 12, 1, 0};
constexpr std::uint32_t kM24D[] = {0, 18, 6, 3, 2, 21, 1, 5, 16, 12, 7, 19, 8, 9, 17, 15, 13, 11, 4, 22, 10, 20, 14, 23};
constexpr std::uint32_t kM23A[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 0};
constexpr std::uint32_t kM23B[] = {0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21};
constexpr std::uint32_t kM23D[] = {0, 18, 6, 3, 2, 21, 1, 5, 16, 12, 7, 19, 8, 9, 17, 15, 13, 11, 4, 22, 10, 20, 14};
constexpr std::uint32_t kM12A[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0, 11};
constexpr std::uint32_t kM12B[] = {0, 1, 6, 9, 5, 3, 10, 2, 8, 4, 7, 11};
constexpr std::uint32_t kM12C[] = {11, 10, 5, 7, 8, 2, 9, 3, 4, 6, 1, 0};
constexpr std::uint32_t kM11A[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0};
constexpr std::uint32_t kM11B[] = {0, 1, 6, 9, 5, 3, 10, 2, 8, 4, 7};

template <std::size_t N>
Perm as_perm(const std::uint32_t (&a)[N]) {
  return Perm(std::vector<std::uint32_t>(a, a + N));
}
}  // namespace mathieu_data

inline std::vector<Perm> s_n_gens(int n) {
  if (n < 1) throw error(errc::bad_input, "s_n_gens needs n >= 1");
  std::uint32_t d = static_cast<std::uint32_t>(n);
  if (n == 1) return {Perm(d)};
  std::vector<std::uint32_t> cycle(d), swap01(d);
  for (std::uint32_t i = 0; i < d; ++i) cycle[i] = (i + 1) % d, swap01[i] = i;
  std::swap(swap01[0], swap01[1]);
  return {Perm(std::move(swap01)), Perm(std::move(cycle))};
}

inline std::vector<Perm> a_n_gens(int n) {
  if (n < 3) throw error(errc::bad_input, "a_n_gens needs n >= 3");
  std::uint32_t d = static_cast<std::uint32_t>(n);
  std::vector<std::uint32_t> three(d);
  for (std::uint32_t i = 0; i < d; ++i) three[i] = i;
  three[0] = 1, three[1] = 2, three[2] = 0;
  std::vector<std::uint32_t> big(d);
  if (n % 2) {  // n-cycle is even
    for (std::uint32_t i = 0; i < d; ++i) big[i] = (i + 1) % d;
  } else {  // (n-1)-cycle on the last n-1 points
    big[0] = 0;
    for (std::uint32_t i = 1; i < d; ++i) big[i] = 1 + (i % (d - 1));
  }
  return {Perm(std::move(three)), Perm(std::move(big))};
}

namespace detail {

inline void verify_registry(const std::vector<Perm>& gens, unsigned long long expect_order,
                            int expect_trans, const LinearCode* preserved, const char* name) {
  PermGroup g(gens);
  if (g.order() != expect_order)
    throw error(errc::bad_input, std::string(name) + ": committed generators have wrong order");
  if (expect_trans > 0 && !is_k_transitive(gens, expect_trans))
    throw error(errc::bad_input, std::string(name) + ": committed generators miss transitivity degree");
  if (preserved)
    for (const auto& p : gens)
      if (!is_code_automorphism(p, *preserved))
        throw error(errc::bad_input, std::string(name) + ": generator does not preserve the code");
}

}  // namespace detail

inline const std::vector<Perm>& m24_gens() {
  using namespace mathieu_data;
  static const std::vector<Perm> gens = [] {
    std::vector<Perm> g = {as_perm(kM24A), as_perm(kM24B), as_perm(kM24C), as_perm(kM24D)};
    detail::verify_registry(g, 244823040ull, 5, &golay24(), "m24");
    return g;
  }();
  return gens;
}

inline const std::vector<Perm>& m23_gens() {
  using namespace mathieu_data;
  static const std::vector<Perm> gens = [] {
    std::vector<Perm> g = {as_perm(kM23A), as_perm(kM23B), as_perm(kM23D)};
    detail::verify_registry(g, 10200960ull, 4, &golay23(), "m23");
    return g;
  }();
  return gens;
}

inline const std::vector<Perm>& m12_gens() {
  using namespace mathieu_data;
  static const std::vector<Perm> gens = [] {
    std::vector<Perm> g = {as_perm(kM12A), as_perm(kM12B), as_perm(kM12C)};
    detail::verify_registry(g, 95040ull, 5, nullptr, "m12");
    return g;
  }();
  return gens;
}

inline const std::vector<Perm>& m11_gens() {
  using namespace mathieu_data;
  static const std::vector<Perm> gens = [] {
    std::vector<Perm> g = {as_perm(kM11A), as_perm(kM11B)};
    detail::verify_registry(g, 7920ull, 4, nullptr, "m11");
    return g;
  }();
  return gens;
}

/// PGammaL(2,8) of degree 9: PSL(2,8) extended by the Frobenius map, acting
/// on the projective line over GF(8). Points 0..7 are the field elements
/// (GF(8) = GF(2)[t]/(t^3+t+1), element x encoded by its coefficient bits)
/// and point 8 is infinity.
inline const std::vector<Perm>& pgl_gamma_2_8_gens() {
  static const std::vector<Perm> gens = [] {
    constexpr int kInf = 8;
    auto mul = [](int a, int b) {
      int r = 0;
      while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        if (a & 8) a ^= 0b1011;
        b >>= 1;
      }
      return r;
    };
    auto inv = [&](int a) {
      for (int x = 1; x < 8; ++x)
        if (mul(a, x) == 1) return x;
      return 0;
    };
    auto table = [&](auto f) {
      std::vector<std::uint32_t> img(9);
      for (int x = 0; x <= 8; ++x) img[static_cast<std::size_t>(x)] = static_cast<std::uint32_t>(f(x));
      return Perm(std::move(img));
    };
    std::vector<Perm> g = {
        table([&](int x) { return x == kInf ? kInf : x ^ 1; }),                       // y -> y+1
        table([&](int x) { return x == kInf ? kInf : mul(x, 2); }),                   // y -> t*y
        table([&](int x) { return x == kInf ? 0 : x == 0 ? kInf : inv(x); }),         // y -> 1/y
        table([&](int x) { return x == kInf ? kInf : mul(x, x); }),                   // Frobenius
    };
    detail::verify_registry(g, 1512ull, 3, nullptr, "pgl_gamma_2_8");
    return g;
  }();
  return gens;
}

}  // namespace recta
