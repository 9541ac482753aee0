#pragma once

// Defining identities of the map classes, instantiated on basis inputs.
// Shared by the checker (concrete maps, coefficients in Q(q)) and the solver
// (ansatz maps, coefficients are linear forms in the unknowns).
//
// Ev supplies the algebra: Scalar, Vec = BasicVector<Scalar>, bracket(g, h),
// alpha(g), alpha_power(g, k) and parity(g).

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "homlie/algebra.hpp"

namespace homlie::detail {

template <class S = QRational>
S sign(int exponent) {
  return exponent % 2 == 0 ? S(1) : -S(1);
}

/// Bilinear extension of ev's bracket.
template <class Ev, class A, class B>
auto lie(Ev& ev, const BasicVector<A>& x, const BasicVector<B>& y) {
  using C = decltype(std::declval<A>() * std::declval<B>());
  BasicVector<C> out;
  for (const auto& [gx, cx] : x.terms())
    for (const auto& [gy, cy] : y.terms())
      for (const auto& [gt, ct] : ev.bracket(gx, gy).terms()) {
        // Multiply the scalars first so a form coefficient is scaled only once.
        if constexpr (std::is_same_v<A, typename Ev::Scalar>)
          out.push(gt, (cx * ct) * cy);
        else
          out.push(gt, cx * (cy * ct));
      }
  out.normalize();
  return out;
}

template <class Ev, class A>
BasicVector<A> twist(Ev& ev, const BasicVector<A>& x) {
  BasicVector<A> out;
  for (const auto& [gx, cx] : x.terms())
    for (const auto& [gt, ct] : ev.alpha(gx).terms()) out.push(gt, cx * ct);
  out.normalize();
  return out;
}

/// phi(u, v) for vectors; nullopt when some pair of generators is outside the map's domain.
/// Map callables return a pointer to the value, or nullptr outside the domain.
template <class C, class S, class Phi>
std::optional<BasicVector<C>> apply_bilinear(const Phi& phi, const BasicVector<S>& u, const BasicVector<S>& v) {
  BasicVector<C> out;
  for (const auto& [g, cg] : u.terms()) {
    for (const auto& [h, ch] : v.terms()) {
      const BasicVector<C>* r = phi(g, h);
      if (!r) return std::nullopt;
      const S c = cg * ch;
      for (const auto& [t, ct] : r->terms()) out.push(t, ct * c);
    }
  }
  out.normalize();
  return out;
}

template <class C, class S, class Lin>
std::optional<BasicVector<C>> apply_linear(const Lin& f, const BasicVector<S>& u) {
  BasicVector<C> out;
  for (const auto& [g, cg] : u.terms()) {
    const BasicVector<C>* r = f(g);
    if (!r) return std::nullopt;
    for (const auto& [t, ct] : r->terms()) out.push(t, ct * cg);
  }
  out.normalize();
  return out;
}

struct BilinearIdentity {
  bool super = false;        // Koszul signs
  bool alpha_inside = true;  // false for the alpha-classes
  int parity = 0;            // parity of the map
};

/**
 * Calls emit(equation, inputs, lhs, rhs) for the two defining equations on
 * every ordered basis triple whose map arguments all lie in the domain of phi.
 * Equations are enumerated first by equation, then by triple.
 */
template <class C, class Ev, class Phi, class Emit>
void bilinear_instances(Ev& ev, const std::vector<Generator>& basis, const BilinearIdentity& id, const Phi& phi,
                        Emit&& emit) {
  using S = typename Ev::Scalar;
  using Vec = typename Ev::Vec;
  const std::string prefix = std::string(id.alpha_inside ? "" : "alpha-") + (id.super ? "super-" : "");
  const std::string e1 = prefix + "left";
  const std::string e2 = prefix + "right";
  auto inner = [&](const Generator& g) { return id.alpha_inside ? ev.alpha(g) : Vec::basis(g); };
  const int gamma = id.parity;

  // phi([x,y], A(z)) = s1 [phi(x,z), alpha(y)] + s2 [alpha(x), phi(y,z)]
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      const Vec& xy = ev.bracket(x, y);
      for (const auto& z : basis) {
        auto lhs = apply_bilinear<C>(phi, xy, inner(z));
        if (!lhs) continue;
        const BasicVector<C>* pxz = phi(x, z);
        const BasicVector<C>* pyz = phi(y, z);
        if (!pxz || !pyz) continue;
        BasicVector<C> rhs = lie(ev, *pxz, ev.alpha(y));
        BasicVector<C> t2 = lie(ev, ev.alpha(x), *pyz);
        if (id.super) {
          rhs = rhs.scaled(sign<S>(ev.parity(y) * ev.parity(z)));
          t2 = t2.scaled(sign<S>(gamma * ev.parity(x)));
        }
        rhs += t2;
        emit(e1, std::vector<Generator>{x, y, z}, *lhs, rhs);
      }
    }
  }
  // phi(A(x), [y,z]) = [phi(x,y), alpha(z)] + s3 [alpha(y), phi(x,z)]
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      for (const auto& z : basis) {
        auto lhs = apply_bilinear<C>(phi, inner(x), ev.bracket(y, z));
        if (!lhs) continue;
        const BasicVector<C>* pxy = phi(x, y);
        const BasicVector<C>* pxz = phi(x, z);
        if (!pxy || !pxz) continue;
        BasicVector<C> rhs = lie(ev, *pxy, ev.alpha(z));
        BasicVector<C> t2 = lie(ev, ev.alpha(y), *pxz);
        if (id.super) t2 = t2.scaled(sign<S>((gamma + ev.parity(x)) * ev.parity(y)));
        rhs += t2;
        emit(e2, std::vector<Generator>{x, y, z}, *lhs, rhs);
      }
    }
  }
}

struct DerivationIdentity {
  int k = 0;       // power of alpha
  int parity = 0;  // parity of the map
};

/// D([x,y]) = [D(x), alpha^k(y)] + (-1)^{|x||D|} [alpha^k(x), D(y)] on basis pairs.
template <class C, class Ev, class Lin, class Emit>
void derivation_instances(Ev& ev, const std::vector<Generator>& basis, const DerivationIdentity& id, const Lin& f,
                          Emit&& emit) {
  using S = typename Ev::Scalar;
  using Vec = typename Ev::Vec;
  const std::string name = id.k == 0 ? "der" : "alpha" + std::to_string(id.k) + "-der";
  std::vector<Vec> twisted;
  twisted.reserve(basis.size());
  for (const auto& g : basis) twisted.push_back(ev.alpha_power(g, id.k));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Generator& x = basis[i];
    const BasicVector<C>* fx = f(x);
    if (!fx) continue;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Generator& y = basis[j];
      auto lhs = apply_linear<C>(f, ev.bracket(x, y));
      if (!lhs) continue;
      const BasicVector<C>* fy = f(y);
      if (!fy) continue;
      BasicVector<C> rhs = lie(ev, *fx, twisted[j]);
      rhs += lie(ev, twisted[i], *fy).scaled(sign<S>(ev.parity(x) * id.parity));
      emit(name, std::vector<Generator>{x, y}, *lhs, rhs);
    }
  }
}

/**
 * Commuting-map conditions: [f(x), y] = [x, f(y)] (lie) or
 * [f(x), y] = -(-1)^{|x||y|} [f(y), x] (super) on basis pairs, then
 * f(alpha(x)) = alpha(f(x)) on basis elements.
 */
template <class C, class Ev, class Lin, class Emit>
void commuting_instances(Ev& ev, const std::vector<Generator>& basis, bool super, const Lin& f, Emit&& emit) {
  using S = typename Ev::Scalar;
  using Vec = typename Ev::Vec;
  for (const auto& x : basis) {
    const BasicVector<C>* fx = f(x);
    if (!fx) continue;
    for (const auto& y : basis) {
      const BasicVector<C>* fy = f(y);
      if (!fy) continue;
      BasicVector<C> lhs = lie(ev, *fx, Vec::basis(y));
      BasicVector<C> rhs;
      if (super) {
        rhs = lie(ev, *fy, Vec::basis(x)).scaled(-sign<S>(ev.parity(x) * ev.parity(y)));
        emit("super-commuting", std::vector<Generator>{x, y}, lhs, rhs);
      } else {
        rhs = lie(ev, Vec::basis(x), *fy);
        emit("commuting", std::vector<Generator>{x, y}, lhs, rhs);
      }
    }
  }
  for (const auto& x : basis) {
    auto lhs = apply_linear<C>(f, ev.alpha(x));
    const BasicVector<C>* fx = f(x);
    if (!lhs || !fx) continue;
    emit("alpha-commutes", std::vector<Generator>{x}, *lhs, twist(ev, *fx));
  }
}

}  // namespace homlie::detail
