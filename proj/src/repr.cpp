#include "localdeg/repr.hpp"

#include <algorithm>
#include <stdexcept>

#include "localdeg/error.hpp"

namespace localdeg {

namespace {

std::string model_tag(std::uint32_t p, std::uint32_t m) {
  return "E(" + std::to_string(p) + "," + std::to_string(m) + ")";
}

FqMatrix matrix_power(const FqMatrix& a, std::uint64_t k) {
  FqMatrix r = FqMatrix::identity(a.rows(), a.q());
  FqMatrix b = a;
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

// Images of all elements (u, a) = prod_i x_i^u[2i] y_i^u[2i+1] * z^(a - beta(u,u)),
// where z acts as the scalar c.
std::vector<FqMatrix> symplectic_images(const SymplecticExtraspecial& g,
                                        const std::vector<FqMatrix>& gen_images, Fq c) {
  const std::uint32_t p = g.p();
  const std::size_t dim = gen_images.front().rows();
  const std::uint32_t q = gen_images.front().q();
  const PrimeField f(q);
  std::vector<std::vector<FqMatrix>> powers(gen_images.size());
  for (std::size_t k = 0; k < gen_images.size(); ++k) {
    powers[k].push_back(FqMatrix::identity(dim, q));
    for (std::uint32_t e = 1; e < p; ++e) powers[k].push_back(powers[k].back() * gen_images[k]);
  }
  std::vector<FqMatrix> out;
  out.reserve(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    const auto pt = g.decode(x);
    FqMatrix m = FqMatrix::identity(dim, q);
    for (std::size_t k = 0; k < pt.u.size(); ++k) {
      if (pt.u[k]) m = m * powers[k][pt.u[k]];
    }
    const std::uint32_t e = (pt.a + p - g.beta(pt.u, pt.u)) % p;
    const Fq s = f.pow(c, e);
    if (s != 1) {
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = f.mul(m.at(i, j), s);
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

// x_i^p = y_i^p = 1, [x_i, y_i] = c, all other generator pairs commute.
bool check_relations(const SymplecticExtraspecial& g, const std::vector<FqMatrix>& gens, Fq c) {
  const std::size_t dim = gens.front().rows();
  const std::uint32_t q = gens.front().q();
  const PrimeField f(q);
  if (f.pow(c, g.p()) != 1) return false;
  std::vector<FqMatrix> inv;
  for (const auto& a : gens) {
    if (!matrix_power(a, g.p()).is_identity()) return false;
    inv.push_back(a.inverse());
  }
  const FqMatrix id = FqMatrix::identity(dim, q);
  const auto elems = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const FqMatrix comm = gens[i] * gens[j] * inv[i] * inv[j];
      const Elem expected = g.commutator(elems[i], elems[j]);
      const std::uint32_t a = g.decode(expected).a;
      if (!(comm == (a == 0 ? id : FqMatrix::scalar(dim, q, f.pow(c, a))))) return false;
    }
  }
  return true;
}

FqMatrix translation_matrix(std::size_t n, std::uint32_t q, const std::vector<Elem>& target) {
  FqMatrix m(n, n, q);
  for (std::size_t h = 0; h < n; ++h) m.at(target[h], h) = 1;
  return m;
}

// Image index of e_k under a permutation matrix.
std::vector<std::size_t> perm_of(const FqMatrix& a) {
  std::vector<std::size_t> pi(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k)) pi[k] = i;
    }
  }
  return pi;
}

// U A_g = B_g U with every A_g a permutation matrix. Column k of U is u_k and
// the equation reads u_{pi_g(k)} = B_g u_k, so each orbit is determined by
// the vector at its root.
std::vector<FqMatrix> perm_intertwiners(std::span<const FqMatrix> a, std::span<const FqMatrix> b) {
  const std::size_t dim_a = a.front().rows();
  const std::size_t dim_b = b.front().rows();
  const std::uint32_t q = b.front().q();
  const PrimeField f(q);
  std::vector<std::vector<std::size_t>> perms;
  for (const auto& m : a) perms.push_back(perm_of(m));

  std::vector<FqMatrix> transport(dim_a);
  std::vector<char> visited(dim_a, 0);
  std::vector<FqMatrix> out;
  for (std::size_t root = 0; root < dim_a; ++root) {
    if (visited[root]) continue;
    std::vector<std::size_t> orbit{root};
    visited[root] = 1;
    transport[root] = FqMatrix::identity(dim_b, q);
    FqSubspace constraints(dim_b, q);
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const std::size_t k = orbit[head];
      for (std::size_t g = 0; g < perms.size(); ++g) {
        const std::size_t j = perms[g][k];
        FqMatrix cand = b[g] * transport[k];
        if (!visited[j]) {
          visited[j] = 1;
          transport[j] = std::move(cand);
          orbit.push_back(j);
          continue;
        }
        std::vector<Fq> row(dim_b);
        for (std::size_t i = 0; i < dim_b; ++i) {
          for (std::size_t c = 0; c < dim_b; ++c) row[c] = f.sub(cand.at(i, c), transport[j].at(i, c));
          constraints.insert(row);
        }
      }
    }
    const FqMatrix null = constraints.dim() == 0 ? FqMatrix::identity(dim_b, q)
                                                 : constraints.basis_matrix().nullspace();
    for (std::size_t s = 0; s < null.rows(); ++s) {
      FqMatrix u(dim_b, dim_a, q);
      for (std::size_t k : orbit) {
        const auto col = transport[k].apply(null.row(s));
        for (std::size_t i = 0; i < dim_b; ++i) u.at(i, k) = col[i];
      }
      out.push_back(std::move(u));
    }
  }
  return out;
}

std::vector<FqMatrix> dense_intertwiners(std::span<const FqMatrix> a, std::span<const FqMatrix> b) {
  const std::size_t dim_a = a.front().rows();
  const std::size_t dim_b = b.front().rows();
  const std::uint32_t q = b.front().q();
  const PrimeField f(q);
  const std::size_t n = dim_a * dim_b;
  auto var = [dim_a](std::size_t i, std::size_t j) { return i * dim_a + j; };
  FqSubspace eqs(n, q);
  std::vector<Fq> row(n);
  for (std::size_t g = 0; g < a.size(); ++g) {
    for (std::size_t i = 0; i < dim_b; ++i) {
      for (std::size_t j = 0; j < dim_a; ++j) {
        std::fill(row.begin(), row.end(), 0);
        for (std::size_t k = 0; k < dim_a; ++k) row[var(i, k)] = f.add(row[var(i, k)], a[g].at(k, j));
        for (std::size_t k = 0; k < dim_b; ++k) row[var(k, j)] = f.sub(row[var(k, j)], b[g].at(i, k));
        eqs.insert(row);
      }
    }
  }
  const FqMatrix null =
      eqs.dim() == 0 ? FqMatrix::identity(n, q) : eqs.basis_matrix().nullspace();
  std::vector<FqMatrix> out;
  for (std::size_t s = 0; s < null.rows(); ++s) {
    FqMatrix u(dim_b, dim_a, q);
    for (std::size_t i = 0; i < dim_b; ++i) {
      for (std::size_t j = 0; j < dim_a; ++j) u.at(i, j) = null.at(s, var(i, j));
    }
    out.push_back(std::move(u));
  }
  return out;
}

void require_same_group(const MatrixRep& r, const MatrixRep& s) {
  if (r.group_tag != s.group_tag || r.group_order != s.group_order || r.generators != s.generators ||
      r.q != s.q) {
    throw Error(Errc::GroupMismatch, r.group_tag + " vs " + s.group_tag);
  }
}

}  // namespace

// ---------------------------------------------------------------------------

BaseModule base_module_W(std::uint32_t p, std::uint32_t q) {
  const PrimeField f(q);
  if (!is_prime(p) || p == 2) throw Error(Errc::InvalidArgument, "p must be an odd prime");
  const Fq zeta = f.least_primitive_root_of_unity(p);
  SymplecticExtraspecial g(p, 1);

  BaseModule out;
  out.zeta = zeta;
  out.x_image = FqMatrix(p, p, q);
  out.y_image = FqMatrix(p, p, q);
  for (std::uint32_t i = 0; i < p; ++i) {
    out.x_image.at(i, (i + 1) % p) = 1;
    out.y_image.at(i, i) = f.pow(zeta, i + 1);
  }
  const FqMatrix comm = out.x_image * out.y_image * out.x_image.inverse() * out.y_image.inverse();
  const auto c = comm.scalar_value();
  if (!c) throw std::logic_error("base_module_W: commutator is not scalar");
  out.commutator_scalar = *c;

  out.rep.q = q;
  out.rep.dim = p;
  out.rep.group_tag = model_tag(p, 1);
  out.rep.group_order = g.order();
  out.rep.generators = g.generators();
  out.rep.generator_images = {out.x_image, out.y_image};
  out.rep.images = symplectic_images(g, out.rep.generator_images, out.commutator_scalar);
  out.homomorphism_verified = verify_homomorphism(out.rep, g);
  return out;
}

TensorModule tensor_power_rep(std::uint32_t p, std::uint32_t q, std::uint32_t m,
                              std::size_t materialize_cap) {
  const BaseModule w = base_module_W(p, q);
  TensorModule out{SymplecticExtraspecial(p, m), {}, w.zeta, w.commutator_scalar, false, false, false};
  std::size_t dim = 1;
  for (std::uint32_t i = 0; i < m; ++i) dim *= p;

  std::vector<FqMatrix> gens;
  for (std::uint32_t i = 0; i < m; ++i) {
    for (const FqMatrix* base : {&w.x_image, &w.y_image}) {
      FqMatrix acc = FqMatrix::identity(1, q);
      for (std::uint32_t j = 0; j < m; ++j) acc = acc.kron(j == i ? *base : FqMatrix::identity(p, q));
      gens.push_back(std::move(acc));
    }
  }
  out.rep.q = q;
  out.rep.dim = dim;
  out.rep.group_tag = model_tag(p, m);
  out.rep.group_order = out.group.order();
  out.rep.generators = out.group.generators();
  out.rep.generator_images = gens;
  out.relations_verified = check_relations(out.group, gens, out.central_scalar);
  if (out.group.order() * dim * dim <= materialize_cap) {
    out.rep.images = symplectic_images(out.group, gens, out.central_scalar);
    if (out.group.order() <= 243) {
      out.homomorphism_exhaustive = true;
      out.homomorphism_verified = verify_homomorphism(out.rep, out.group);
    }
  }
  if (!out.homomorphism_exhaustive) out.homomorphism_verified = out.relations_verified;
  return out;
}

ProductTensorModule tensor_rep_on_product(std::uint32_t p, std::uint32_t q, std::uint32_t m,
                                          std::size_t cap) {
  const BaseModule w = base_module_W(p, q);
  const auto h = heisenberg(p, cap);
  std::size_t order = 1;
  for (std::uint32_t i = 0; i < m; ++i) order *= h.table.order();
  if (order > cap) throw Error(Errc::CapExceeded, "H^m exceeds the table cap");
  const std::vector<TableGroup> factors(m, h.table);

  ProductTensorModule out{direct_product(factors), {}, {}, {}};
  out.rep.q = q;
  out.rep.group_tag = "H(" + std::to_string(p) + ")^" + std::to_string(m);
  out.rep.group_order = order;
  out.rep.images.reserve(order);
  for (Elem e = 0; e < order; ++e) {
    FqMatrix acc = FqMatrix::identity(1, q);
    for (Elem c : product_components(factors, e)) acc = acc.kron(w.rep.images[h.isomorphism[c]]);
    out.rep.images.push_back(std::move(acc));
  }
  out.rep.dim = out.rep.images.front().rows();
  out.rep.generators = greedy_generators(out.product, whole_group(out.product));
  for (Elem g : out.rep.generators) out.rep.generator_images.push_back(out.rep.images[g]);

  const std::size_t p2 = std::size_t{p} * p;
  std::vector<Elem> comps(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    std::fill(comps.begin(), comps.end(), 0);
    comps[i] = static_cast<Elem>(p2);  // z in the i-th factor
    const auto s = out.rep.images[product_element(factors, comps)].scalar_value();
    out.central_scalars.push_back(s ? *s : 0);
  }
  std::size_t total = 1;
  for (std::uint32_t i = 0; i < m; ++i) total *= p;
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t rest = t, sum = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
      comps[i] = static_cast<Elem>((rest % p) * p2);
      sum += rest % p;
      rest /= p;
    }
    if (sum % p == 0) out.central_kernel.members.push_back(product_element(factors, comps));
  }
  std::sort(out.central_kernel.members.begin(), out.central_kernel.members.end());
  return out;
}

namespace {

template <class G>
MatrixRep regular_impl(const G& g, std::span<const Elem> gens, std::uint32_t q, std::string tag,
                       std::size_t cap) {
  PrimeField f(q);
  const std::size_t n = g.order();
  if (n > cap) throw Error(Errc::CapExceeded, "regular module exceeds the cap");
  MatrixRep r;
  r.q = q;
  r.dim = n;
  r.group_tag = std::move(tag);
  r.group_order = n;
  r.generators.assign(gens.begin(), gens.end());
  std::vector<Elem> target(n);
  auto translate = [&](Elem x) {
    for (Elem h = 0; h < n; ++h) target[h] = g.mul(x, h);
    return translation_matrix(n, q, target);
  };
  for (Elem x : gens) r.generator_images.push_back(translate(x));
  if (n <= 64) {
    for (Elem x = 0; x < n; ++x) r.images.push_back(translate(x));
  }
  return r;
}

}  // namespace

MatrixRep regular_module(const TableGroup& g, std::uint32_t q, std::string tag, std::size_t cap) {
  const auto gens = greedy_generators(g, whole_group(g));
  return regular_impl(g, gens, q, std::move(tag), cap);
}

MatrixRep regular_module(const SymplecticExtraspecial& g, std::uint32_t q, std::size_t cap) {
  const auto gens = g.generators();
  return regular_impl(g, gens, q, model_tag(g.p(), g.m()), cap);
}

MatrixRep trivial_rep(const MatrixRep& like, std::size_t dim) {
  MatrixRep r;
  r.q = like.q;
  r.dim = dim;
  r.group_tag = like.group_tag;
  r.group_order = like.group_order;
  r.generators = like.generators;
  r.generator_images.assign(like.generators.size(), FqMatrix::identity(dim, like.q));
  if (like.has_all_images()) r.images.assign(like.group_order, FqMatrix::identity(dim, like.q));
  return r;
}

std::vector<FqMatrix> intertwiners(std::span<const FqMatrix> a, std::span<const FqMatrix> b) {
  if (a.size() != b.size() || a.empty()) {
    throw Error(Errc::InvalidArgument, "generator image lists must match and be nonempty");
  }
  const auto perm = [](const FqMatrix& m) { return m.is_permutation(); };
  if (std::all_of(a.begin(), a.end(), perm)) return perm_intertwiners(a, b);
  if (std::all_of(b.begin(), b.end(), perm)) {
    // U A = B U  <=>  U^T B^T = A^T U^T, and B^T is again a permutation.
    std::vector<FqMatrix> at, bt;
    for (const auto& m : a) at.push_back(m.transpose());
    for (const auto& m : b) bt.push_back(m.transpose());
    auto sols = perm_intertwiners(bt, at);
    for (auto& s : sols) s = s.transpose();
    return sols;
  }
  return dense_intertwiners(a, b);
}

std::size_t hom_space_dimension(const MatrixRep& r, const MatrixRep& s) {
  require_same_group(r, s);
  return intertwiners(r.generator_images, s.generator_images).size();
}

std::size_t commutant_dimension(const MatrixRep& r) { return hom_space_dimension(r, r); }

FqSubspace equivariant_embedding(const MatrixRep& w, const MatrixRep& regular) {
  require_same_group(w, regular);
  for (const auto& u : intertwiners(w.generator_images, regular.generator_images)) {
    FqSubspace image = FqSubspace::span_of_rows(u.transpose());
    if (image.dim() == w.dim) return image;
  }
  throw Error(Errc::NoEmbedding, "no injective equivariant map into the regular module");
}

bool is_invariant(const MatrixRep& r, const FqSubspace& s) {
  const auto& mats = r.has_all_images() ? r.images : r.generator_images;
  for (const auto& m : mats) {
    for (const auto& v : s.basis()) {
      if (!s.contains(m.apply(v))) return false;
    }
  }
  return true;
}

std::size_t spin_closure_dimension(const MatrixRep& r, std::span<const Fq> v) {
  FqSubspace s(r.dim, r.q);
  std::vector<std::vector<Fq>> queue;
  if (s.insert(v)) queue.emplace_back(v.begin(), v.end());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& m : r.generator_images) {
      auto w = m.apply(queue[head]);
      if (s.insert(w)) queue.push_back(std::move(w));
    }
  }
  return s.dim();
}

std::vector<Elem> kernel(const MatrixRep& r) {
  if (!r.has_all_images()) throw Error(Errc::InvalidArgument, "kernel needs every image");
  std::vector<Elem> k;
  for (Elem e = 0; e < r.images.size(); ++e) {
    if (r.images[e].is_identity()) k.push_back(e);
  }
  return k;
}

bool is_faithful(const MatrixRep& r) { return kernel(r).size() == 1; }

}  // namespace localdeg
