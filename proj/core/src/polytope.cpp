#include "thurstonkit/polytope.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>

#include "thurstonkit/errors.hpp"
#include "thurstonkit/linalg.hpp"

namespace thurstonkit {
namespace {

void check_scale(std::size_t dim) {
  if (dim == 0) throw ContractViolation("polytope dimension must be positive");
  if (dim > kMaxPolytopeDim) {
    throw ScaleError("polytope dimension " + std::to_string(dim) + " exceeds supported maximum " +
                     std::to_string(kMaxPolytopeDim));
  }
}

// Calls fn once for every k-subset of {0, ..., n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

RatMat select_rows(const RatMat& a, const std::vector<std::size_t>& idx) {
  std::vector<RatVec> rows;
  rows.reserve(idx.size());
  for (auto i : idx) rows.push_back(a.row(i));
  return RatMat::from_rows(std::move(rows), a.cols());
}

// x = sum_k y_k basis_k
RatVec combine(const std::vector<RatVec>& basis, const RatVec& y, std::size_t dim) {
  RatVec x(dim);
  for (std::size_t k = 0; k < basis.size(); ++k) x += y[k] * basis[k];
  return x;
}

HalfSpace normalized(RatVec normal, Rat rhs) {
  if (rhs.is_zero()) return HalfSpace{primitive_integer(normal), Rat(0)};
  const Rat s = Rat(1) / rhs.abs();
  normal *= s;
  rhs *= s;
  return HalfSpace{std::move(normal), std::move(rhs)};
}

void check_vectors(const std::vector<RatVec>& vs, std::size_t dim, const char* what) {
  for (const auto& v : vs) {
    if (v.dim() != dim) {
      throw ContractViolation(std::string(what) + " has dimension " + std::to_string(v.dim()) +
                              ", expected " + std::to_string(dim));
    }
  }
}

}  // namespace

VRep canonical(VRep v) {
  check_vectors(v.vertices, v.dim, "vertex");
  check_vectors(v.rays, v.dim, "ray");
  check_vectors(v.lineality, v.dim, "lineality vector");

  VRep out;
  out.dim = v.dim;
  if (!v.lineality.empty()) out.lineality = row_space_basis(RatMat::from_rows(v.lineality, v.dim));

  std::set<RatVec> verts;
  for (const auto& p : v.vertices) verts.insert(project_out(p, out.lineality));
  out.vertices.assign(verts.begin(), verts.end());

  std::set<RatVec> rays;
  for (const auto& r : v.rays) {
    RatVec q = project_out(r, out.lineality);
    if (!q.is_zero()) rays.insert(primitive_integer(q));
  }
  out.rays.assign(rays.begin(), rays.end());
  return out;
}

VRep h_to_v(const HRep& h) {
  check_scale(h.dim);
  std::vector<RatVec> normals;
  std::vector<Rat> rhs;
  for (const auto& hs : h.halfspaces) {
    normals.push_back(hs.normal);
    rhs.push_back(hs.rhs);
  }
  for (const auto& eq : h.equations) {
    normals.push_back(eq.normal);
    rhs.push_back(eq.rhs);
    normals.push_back(-eq.normal);
    rhs.push_back(-eq.rhs);
  }
  check_vectors(normals, h.dim, "halfspace normal");
  for (const auto& n : normals) {
    if (n.is_zero()) throw ContractViolation("halfspace with zero normal");
  }

  const RatMat a = RatMat::from_rows(normals, h.dim);
  VRep out;
  out.dim = h.dim;
  out.lineality = kernel_basis(a);
  const std::vector<RatVec> basis = row_space_basis(a);
  const std::size_t r = basis.size();
  const std::size_t m = normals.size();

  if (r == 0) {
    // No constraints at all: the whole space.
    out.vertices.push_back(RatVec(h.dim));
    return canonical(std::move(out));
  }

  // Constraints in coordinates y of the row space, x = sum_k y_k basis_k.
  RatMat reduced(m, r);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < r; ++k) reduced(i, k) = dot(normals[i], basis[k]);

  auto feasible = [&](const RatVec& y) {
    for (std::size_t i = 0; i < m; ++i) {
      if (dot(reduced.row(i), y) > rhs[i]) return false;
    }
    return true;
  };

  std::set<RatVec> ys;
  for_each_subset(m, r, [&](const std::vector<std::size_t>& idx) {
    const RatMat sub = select_rows(reduced, idx);
    if (rank(sub) != r) return;
    RatVec b(r);
    for (std::size_t k = 0; k < r; ++k) b[k] = rhs[idx[k]];
    const auto y = solve_linear_system(sub, b);
    if (y && feasible(*y)) ys.insert(*y);
  });
  if (ys.empty()) return VRep{h.dim, {}, {}, {}};
  for (const auto& y : ys) out.vertices.push_back(combine(basis, y, h.dim));

  // Extreme rays of the pointed recession cone {y : reduced.y <= 0}.
  auto recedes = [&](const RatVec& d) {
    for (std::size_t i = 0; i < m; ++i) {
      if (dot(reduced.row(i), d).sign() > 0) return false;
    }
    return true;
  };
  std::set<RatVec> dirs;
  for_each_subset(m, r - 1, [&](const std::vector<std::size_t>& idx) {
    const RatMat sub = select_rows(reduced, idx);
    const auto ker = (r == 1) ? std::vector<RatVec>{RatVec::unit(1, 0)} : kernel_basis(sub);
    if (ker.size() != 1) return;
    for (const RatVec& d : {ker[0], -ker[0]}) {
      if (recedes(d)) dirs.insert(primitive_integer(d));
    }
  });
  for (const auto& d : dirs) out.rays.push_back(combine(basis, d, h.dim));
  return canonical(std::move(out));
}

HRep v_to_h(const VRep& v_in) {
  check_scale(v_in.dim);
  if (v_in.vertices.empty()) throw ContractViolation("v_to_h: empty V-representation");
  const VRep v = canonical(v_in);
  const std::size_t n = v.dim;
  const RatVec& origin = v.vertices.front();

  std::vector<RatVec> dirs;
  for (std::size_t i = 1; i < v.vertices.size(); ++i) dirs.push_back(v.vertices[i] - origin);
  for (const auto& r : v.rays) dirs.push_back(r);
  const std::vector<RatVec> span =
      dirs.empty() ? std::vector<RatVec>{} : row_space_basis(RatMat::from_rows(dirs, n));
  const std::size_t d = span.size();

  HRep out;
  out.dim = n;

  // Affine hull equations: normals orthogonal to span + lineality.
  std::vector<RatVec> hull_rows = span;
  hull_rows.insert(hull_rows.end(), v.lineality.begin(), v.lineality.end());
  const auto orth = kernel_basis(RatMat::from_rows(hull_rows, n));
  if (!orth.empty()) {
    for (const auto& u : row_space_basis(RatMat::from_rows(orth, n))) {
      out.equations.push_back(HalfSpace{u, dot(u, origin)});
    }
  }
  if (d == 0) return out;

  // Coordinates z in the span: gram.z = span.(p - origin).
  RatMat gram(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) gram(i, j) = dot(span[i], span[j]);
  auto coords = [&](const RatVec& w) {
    RatVec b(d);
    for (std::size_t i = 0; i < d; ++i) b[i] = dot(span[i], w);
    return *solve_linear_system(gram, b);
  };

  // Homogenised generators (z, 1) for points and (z, 0) for rays in Q^{d+1}.
  std::vector<RatVec> gens;
  for (const auto& p : v.vertices) {
    RatVec z = coords(p - origin);
    RatVec g(d + 1);
    for (std::size_t i = 0; i < d; ++i) g[i] = z[i];
    g[d] = Rat(1);
    gens.push_back(std::move(g));
  }
  for (const auto& r : v.rays) {
    RatVec z = coords(r);
    RatVec g(d + 1);
    for (std::size_t i = 0; i < d; ++i) g[i] = z[i];
    gens.push_back(std::move(g));
  }
  const RatMat gen_mat = RatMat::from_rows(gens, d + 1);

  // Facets of the homogenised cone: hyperplanes through d independent
  // generators with every generator on the nonnegative side.
  std::set<RatVec> cone_facets;
  for_each_subset(gens.size(), d, [&](const std::vector<std::size_t>& idx) {
    const auto ker = kernel_basis(select_rows(gen_mat, idx));
    if (ker.size() != 1) return;
    RatVec f = ker[0];
    int side = 0;
    for (const auto& g : gens) {
      const int s = dot(f, g).sign();
      if (s == 0) continue;
      if (side == 0) side = s;
      if (s != side) return;
    }
    if (side < 0) f = -f;
    cone_facets.insert(primitive_integer(f));
  });

  std::set<HalfSpace> facets;
  for (const auto& f : cone_facets) {
    // <a, z> + c >= 0 with f = (a, c); a == 0 is the trivial face at infinity.
    RatVec a(d);
    for (std::size_t i = 0; i < d; ++i) a[i] = -f[i];
    if (a.is_zero()) continue;
    // Normal N in the span with <N, span_i . z> == <a, z>: N = span^T t, gram.t = a.
    const RatVec t = *solve_linear_system(gram, a);
    RatVec normal = combine(span, t, n);
    Rat rhs = f[d] + dot(normal, origin);
    facets.insert(normalized(std::move(normal), std::move(rhs)));
  }
  out.halfspaces.assign(facets.begin(), facets.end());
  return out;
}

VRep dual_polytope(const VRep& v_in) {
  check_scale(v_in.dim);
  const VRep v = canonical(v_in);
  if (v.vertices.empty()) throw ContractViolation("dual_polytope: empty input");
  if (!v.rays.empty()) throw ContractViolation("dual_polytope: input with rays is not symmetric");
  std::set<RatVec> verts(v.vertices.begin(), v.vertices.end());
  for (const auto& p : v.vertices) {
    if (!verts.count(-p)) {
      throw ContractViolation("dual_polytope: input is not symmetric about the origin (missing -" +
                              p.str() + ")");
    }
  }
  HRep h;
  h.dim = v.dim;
  for (const auto& p : v.vertices) {
    if (!p.is_zero()) h.halfspaces.push_back(HalfSpace{p, Rat(1)});
  }
  for (const auto& l : v.lineality) h.equations.push_back(HalfSpace{l, Rat(0)});
  return h_to_v(h);
}

std::vector<std::size_t> tight_set(const HRep& h, const RatVec& p) {
  if (p.dim() != h.dim) throw ContractViolation("tight_set: point dimension mismatch");
  for (const auto& eq : h.equations) {
    if (dot(eq.normal, p) != eq.rhs) {
      throw OutsidePolytopeError("point " + p.str() + " violates an equation");
    }
  }
  std::vector<std::size_t> tight;
  for (std::size_t i = 0; i < h.halfspaces.size(); ++i) {
    const Rat value = dot(h.halfspaces[i].normal, p);
    if (value > h.halfspaces[i].rhs) {
      throw OutsidePolytopeError("point " + p.str() + " violates halfspace " + std::to_string(i));
    }
    if (value == h.halfspaces[i].rhs) tight.push_back(i);
  }
  return tight;
}

bool contains(const HRep& h, const RatVec& p) {
  if (p.dim() != h.dim) throw ContractViolation("contains: point dimension mismatch");
  for (const auto& eq : h.equations) {
    if (dot(eq.normal, p) != eq.rhs) return false;
  }
  for (const auto& hs : h.halfspaces) {
    if (dot(hs.normal, p) > hs.rhs) return false;
  }
  return true;
}

std::string to_off(const VRep& v_in) {
  const VRep v = canonical(v_in);
  if (v.dim != 3) throw ContractViolation("OFF output requires a three-dimensional polytope");
  if (!v.bounded() || v.empty()) throw ContractViolation("OFF output requires a bounded polytope");
  const HRep h = v_to_h(v);
  if (!h.equations.empty()) throw ContractViolation("OFF output requires a full-dimensional polytope");

  using P3 = std::array<double, 3>;
  std::vector<P3> pts;
  for (const auto& p : v.vertices) pts.push_back({p[0].to_double(), p[1].to_double(), p[2].to_double()});

  std::vector<std::vector<std::size_t>> faces;
  for (const auto& hs : h.halfspaces) {
    std::vector<std::size_t> face;
    for (std::size_t i = 0; i < v.vertices.size(); ++i) {
      if (dot(hs.normal, v.vertices[i]) == hs.rhs) face.push_back(i);
    }
    P3 c{0, 0, 0};
    for (auto i : face)
      for (int k = 0; k < 3; ++k) c[k] += pts[i][k] / static_cast<double>(face.size());
    const P3 nrm{hs.normal[0].to_double(), hs.normal[1].to_double(), hs.normal[2].to_double()};
    P3 u{pts[face[0]][0] - c[0], pts[face[0]][1] - c[1], pts[face[0]][2] - c[2]};
    const P3 w{nrm[1] * u[2] - nrm[2] * u[1], nrm[2] * u[0] - nrm[0] * u[2], nrm[0] * u[1] - nrm[1] * u[0]};
    auto angle = [&](std::size_t i) {
      const P3 q{pts[i][0] - c[0], pts[i][1] - c[1], pts[i][2] - c[2]};
      return std::atan2(q[0] * w[0] + q[1] * w[1] + q[2] * w[2], q[0] * u[0] + q[1] * u[1] + q[2] * u[2]);
    };
    std::sort(face.begin(), face.end(), [&](std::size_t x, std::size_t y) { return angle(x) < angle(y); });
    faces.push_back(std::move(face));
  }

  std::ostringstream os;
  os << "OFF\n" << pts.size() << ' ' << faces.size() << " 0\n";
  os << std::setprecision(15);
  for (const auto& p : pts) os << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
  for (const auto& f : faces) {
    os << f.size();
    for (auto i : f) os << ' ' << i;
    os << '\n';
  }
  return os.str();
}

}  // namespace thurstonkit
