#include "tdpair/leonard.hpp"

#include "tdpair/bridge.hpp"
#include "tdpair/error.hpp"
#include "tdpair/linalg.hpp"

namespace tdpair {

namespace {

Scalar stored_or_zero(const std::vector<Scalar>& v, long pos, Field f) {
  if (pos < 0 || pos >= static_cast<long>(v.size())) return Scalar::zero(f);
  return v[static_cast<std::size_t>(pos)];
}

Field field_of(const LeonardData& data) { return data.theta.front().field(); }

}  // namespace

Scalar LeonardData::phi_at(long i) const { return stored_or_zero(phi, i - 1, field_of(*this)); }
Scalar LeonardData::x_at(long i) const { return stored_or_zero(x, i - 1, field_of(*this)); }
Scalar LeonardData::b_at(long i) const { return stored_or_zero(b, i, field_of(*this)); }
Scalar LeonardData::c_at(long i) const { return stored_or_zero(c, i - 1, field_of(*this)); }

Scalar taustar_at(const std::vector<Scalar>& thetastar, std::size_t i) {
  Scalar out = Scalar::one(thetastar[0].field());
  for (std::size_t k = 0; k < i; ++k) out *= thetastar[i] - thetastar[k];
  return out;
}

LeonardData derive_leonard_data(const TridiagonalSystem& sys, const SplitDecomposition& split) {
  const std::size_t d = sys.d;
  for (std::size_t rho : sys.shape) {
    if (rho != 1) throw Error(Errc::not_leonard, "shape is not all ones");
  }
  auto fail = [](const std::string& what) { throw Error(Errc::internal_inconsistency, what); };
  const auto& Es = sys.Estar;
  LeonardData data;
  data.d = d;
  data.theta = sys.theta;
  data.thetastar = sys.thetastar;
  for (std::size_t i = 0; i <= d; ++i) {
    const Matrix flat = Es[i] * sys.A * Es[i];
    data.a.push_back(flat.trace());
    if (flat != data.a.back() * Es[i]) fail("E*_i A E*_i is not a multiple of E*_i");
    data.taustar.push_back(taustar_at(sys.thetastar, i));
  }
  const Matrix RL = split.calR * split.calL;
  for (std::size_t i = 1; i <= d; ++i) {
    const Matrix back = Es[i] * sys.A * Es[i - 1] * sys.A * Es[i];
    data.x.push_back(back.trace());
    if (back != data.x.back() * Es[i]) fail("E*_i A E*_{i-1} A E*_i is not a multiple of E*_i");
    const Matrix loop = RL * split.F[i];
    data.phi.push_back(loop.trace());
    if (loop != data.phi.back() * split.F[i]) fail("calR calL F_i is not a multiple of F_i");
    if (data.phi.back().is_zero()) fail("phi vanishes");
  }
  for (std::size_t i = 0; i < d; ++i) {
    data.b.push_back(data.phi[i] * data.taustar[i] / data.taustar[i + 1]);
  }
  for (std::size_t i = 1; i <= d; ++i) {
    data.c.push_back(data.x[i - 1] / data.phi[i - 1] * data.taustar[i] / data.taustar[i - 1]);
  }
  return data;
}

std::pair<Matrix, Matrix> split_basis_pair(const std::vector<Scalar>& theta, const std::vector<Scalar>& thetastar,
                                           const std::vector<Scalar>& phi) {
  if (theta.empty() || thetastar.size() != theta.size() || phi.size() + 1 != theta.size()) {
    throw Error(Errc::invalid_argument, "need d+1 eigenvalues on each side and d split values");
  }
  const Field f = theta[0].field();
  const std::size_t n = theta.size();
  Matrix A(f, n, n), As(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    A.at(i, i) = theta[i];
    As.at(i, i) = thetastar[i];
    if (i + 1 < n) {
      A.at(i + 1, i) = Scalar::one(f);
      As.at(i, i + 1) = phi[i];
    }
  }
  return {A, As};
}

std::pair<TridiagonalSystem, LeonardData> construct_leonard(const std::vector<Scalar>& theta,
                                                            const std::vector<Scalar>& thetastar,
                                                            const std::vector<Scalar>& phi) {
  for (std::size_t k = 0; k < phi.size(); ++k) {
    if (phi[k].is_zero()) throw Error(Errc::not_leonard, "phi_" + std::to_string(k + 1) + " is zero");
  }
  for (const auto* seq : {&theta, &thetastar}) {
    for (std::size_t i = 0; i < seq->size(); ++i)
      for (std::size_t j = i + 1; j < seq->size(); ++j)
        if ((*seq)[i] == (*seq)[j]) throw Error(Errc::not_leonard, "eigenvalues are not mutually distinct");
  }
  const auto [A, As] = split_basis_pair(theta, thetastar, phi);
  const auto verdict = verify_pair(A, As);
  if (!verdict.ok()) throw Error(Errc::not_leonard, std::string(to_string(verdict.failure)) + ": " + verdict.detail);
  auto sys = select_system(verdict.systems, theta, thetastar);
  if (!sys) throw Error(Errc::not_leonard, "the given eigenvalue orderings are not standard");
  const auto split = compute_split(*sys);
  auto data = derive_leonard_data(*sys, split);
  if (data.phi != phi) throw Error(Errc::internal_inconsistency, "recovered split sequence differs from the input");
  return {std::move(*sys), std::move(data)};
}

namespace {

// Basis vector of a line with first nonzero coordinate 1.
std::vector<Scalar> line_vector(const Matrix& idempotent) {
  const Subspace line = image(idempotent);
  if (line.dim() != 1) throw Error(Errc::not_leonard, "eigenspace is not a line");
  return line.basis().column(0);
}

Representation represent(const Matrix& basis, const Matrix& A, const Matrix& As) {
  const Matrix inv = inverse(basis);
  return {basis, inv * A * basis, inv * As * basis};
}

}  // namespace

LeonardRepresentations change_of_basis_reps(const TridiagonalSystem& sys, const RFLDecomposition& rfl,
                                            const SplitDecomposition& split) {
  const std::size_t n = sys.dim();
  const auto zeta = line_vector(sys.Estar[0]);
  const auto xi = line_vector(sys.E[0]);
  std::vector<std::vector<Scalar>> raising, splitting, standard;
  auto r = zeta, s = zeta;
  for (std::size_t i = 0; i < n; ++i) {
    raising.push_back(r);
    splitting.push_back(s);
    standard.push_back(sys.Estar[i].apply(xi));
    r = rfl.R.apply(r);
    s = split.calR.apply(s);
  }
  for (const auto* vs : {&raising, &splitting, &standard}) {
    for (const auto& v : *vs) {
      bool zero = true;
      for (const auto& e : v) zero = zero && e.is_zero();
      if (zero) throw Error(Errc::internal_inconsistency, "zero basis vector");
    }
  }
  const Field f = sys.field();
  return {represent(Matrix::from_columns(f, n, raising), sys.A, sys.Astar),
          represent(Matrix::from_columns(f, n, splitting), sys.A, sys.Astar),
          represent(Matrix::from_columns(f, n, standard), sys.A, sys.Astar)};
}

std::vector<Residual> check_representations(const TridiagonalSystem& sys, const RFLDecomposition& rfl,
                                            const SplitDecomposition& split, const LeonardData& data) {
  const std::size_t n = sys.dim();
  const Field f = sys.field();
  const auto reps = change_of_basis_reps(sys, rfl, split);
  const Scalar one = Scalar::one(f);

  Matrix raiseA(f, n, n), splitA(f, n, n), splitAs(f, n, n), stdA(f, n, n), diagS(f, n, n);
  Matrix sub(f, n, n), superX(f, n, n), diagA(f, n, n), superPhi(f, n, n), subC(f, n, n), superB(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const long li = static_cast<long>(i);
    diagS.at(i, i) = sys.thetastar[i];
    diagA.at(i, i) = data.a[i];
    splitA.at(i, i) = sys.theta[i];
    splitAs.at(i, i) = sys.thetastar[i];
    if (i + 1 < n) {
      sub.at(i + 1, i) = one;
      superX.at(i, i + 1) = data.x_at(li + 1);
      superPhi.at(i, i + 1) = data.phi_at(li + 1);
      subC.at(i + 1, i) = data.c_at(li + 1);
      superB.at(i, i + 1) = data.b_at(li);
    }
  }
  raiseA = sub + diagA + superX;
  splitA += sub;
  splitAs += superPhi;
  stdA = subC + diagA + superB;

  auto rep = [&](const Representation& r, const Matrix& x) { return inverse(r.basis) * x * r.basis; };
  std::vector<Residual> out;
  out.push_back(matrix_residual("raising_A", {}, reps.raising.A - raiseA));
  out.push_back(matrix_residual("raising_Astar", {}, reps.raising.Astar - diagS));
  out.push_back(matrix_residual("raising_R", {}, rep(reps.raising, rfl.R) - sub));
  out.push_back(matrix_residual("raising_L", {}, rep(reps.raising, rfl.L) - superX));
  out.push_back(matrix_residual("raising_F", {}, rep(reps.raising, rfl.F) - diagA));
  out.push_back(matrix_residual("split_A", {}, reps.split.A - splitA));
  out.push_back(matrix_residual("split_Astar", {}, reps.split.Astar - splitAs));
  out.push_back(matrix_residual("split_calR", {}, rep(reps.split, split.calR) - sub));
  out.push_back(matrix_residual("split_calL", {}, rep(reps.split, split.calL) - superPhi));
  out.push_back(matrix_residual("standard_A", {}, reps.standard.A - stdA));
  out.push_back(matrix_residual("standard_Astar", {}, reps.standard.Astar - diagS));
  out.push_back(matrix_residual("standard_R", {}, rep(reps.standard, rfl.R) - subC));
  out.push_back(matrix_residual("standard_L", {}, rep(reps.standard, rfl.L) - superB));

  // Change of basis between the representations.
  const Representation* all[] = {&reps.raising, &reps.split, &reps.standard};
  for (long p = 0; p < 3; ++p) {
    for (long q = p + 1; q < 3; ++q) {
      const Matrix t = inverse(all[p]->basis) * all[q]->basis;
      const Matrix tinv = inverse(t);
      out.push_back(matrix_residual("conjugate_A", {p, q}, tinv * all[p]->A * t - all[q]->A));
      out.push_back(matrix_residual("conjugate_Astar", {p, q}, tinv * all[p]->Astar * t - all[q]->Astar));
    }
  }
  return out;
}

std::vector<Residual> check_section11(const TridiagonalSystem& sys, const SplitDecomposition& split,
                                      const LeonardData& data, const RelationParameters& params) {
  const long d = static_cast<long>(sys.d);
  const Field f = sys.field();
  const auto& th = sys.theta;
  const auto& ths = sys.thetastar;
  const auto& Es = sys.Estar;
  const auto& F = split.F;
  auto a = [&](long i) { return data.a[static_cast<std::size_t>(i)]; };
  auto phi = [&](long i) { return data.phi_at(i); };
  auto x = [&](long i) { return data.x_at(i); };
  auto T = [&](long i) { return th[static_cast<std::size_t>(i)]; };
  auto S = [&](long i) { return ths[static_cast<std::size_t>(i)]; };
  auto tau = [&](long i) { return data.taustar[static_cast<std::size_t>(i)]; };
  const Scalar one = Scalar::one(f), two(f, 2L);
  std::vector<Residual> out;

  // Defining relations of the scalars.
  for (long i = 0; i <= d; ++i) {
    out.push_back(scalar_residual("cab_sum", {i}, data.c_at(i) + a(i) + data.b_at(i) - T(0)));
    out.push_back(matrix_residual("EsAEs", {i}, Es[i] * sys.A * Es[i] - a(i) * Es[i]));
    if (i >= 1) {
      out.push_back(scalar_residual("x_cb", {i}, x(i) - data.c_at(i) * data.b_at(i - 1)));
      out.push_back(matrix_residual("EsAEsAEs_down", {i}, Es[i] * sys.A * Es[i - 1] * sys.A * Es[i] - x(i) * Es[i]));
      out.push_back(scalar_residual("c_tau", {i}, data.c_at(i) - x(i) / phi(i) * tau(i) / tau(i - 1)));
    }
    if (i < d) {
      out.push_back(matrix_residual("EsAEsAEs_up", {i}, Es[i] * sys.A * Es[i + 1] * sys.A * Es[i] - x(i + 1) * Es[i]));
      out.push_back(scalar_residual("b_tau", {i}, data.b_at(i) - phi(i + 1) * tau(i) / tau(i + 1)));
    }
  }
  Scalar trace_gap = Scalar::zero(f);
  for (long i = 0; i <= d; ++i) trace_gap += a(i) - T(i);
  out.push_back(scalar_residual("trace", {}, trace_gap));

  // a_i and x_i recurrences from the tridiagonal relations.
  const auto co = section5_coefficients(sys, params);
  for (long i = 2; i <= d; ++i) {
    out.push_back(scalar_residual("a_recurrence", {i},
                                  *co.gminus[i] * a(i - 2) + a(i - 1) + *co.gplus[i] * a(i) - params.gamma));
  }
  for (long i = 1; i <= d; ++i) {
    // e-_1 and e+_d multiply x_0 = 0 and x_{d+1} = 0.
    Scalar lhs = (params.beta + two) * x(i) + a(i) * a(i) - params.beta * a(i - 1) * a(i) + a(i - 1) * a(i - 1);
    if (co.eminus[i]) lhs += *co.eminus[i] * x(i - 1);
    if (co.eplus[i]) lhs += *co.eplus[i] * x(i + 1);
    out.push_back(scalar_residual("x_recurrence", {i}, lhs - params.gamma * (a(i) + a(i - 1)) - params.rho));
  }

  // a_i through phi.
  for (long i = 0; i <= d; ++i) {
    Scalar rhs = T(i);
    if (i >= 1) rhs += phi(i) / (S(i) - S(i - 1));
    if (i <= d - 1) rhs += phi(i + 1) / (S(i) - S(i + 1));
    out.push_back(scalar_residual("a_phi", {i}, a(i) - rhs));
  }

  // x_i and c_i through phi; the phi_{i-1} and phi_{i+1} terms are present
  // only when those indices are in range.
  for (long i = 1; i <= d; ++i) {
    Scalar rhs = -phi(i) - (T(i - 1) - T(i)) * (S(i - 1) - S(i));
    if (i >= 2) rhs += phi(i - 1) * (S(i) - S(i - 1)) / (S(i) - S(i - 2));
    if (i <= d - 1) rhs += phi(i + 1) * (S(i - 1) - S(i)) / (S(i - 1) - S(i + 1));
    const Scalar gap = S(i - 1) - S(i);
    out.push_back(scalar_residual("x_phi", {i}, gap * gap * x(i) / phi(i) - rhs));
    const Scalar lhs_c = i == 1 ? data.c_at(1) * (S(1) - S(0)) : data.c_at(i) * gap * gap * tau(i - 1) / tau(i);
    out.push_back(scalar_residual("c_phi", {i}, lhs_c - rhs));
  }

  // The j - i >= 2 scalar sums.
  for (long i = 0; i <= d; ++i) {
    for (long j = i + 2; j <= d; ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      Scalar sum = Scalar::zero(f), dual = Scalar::zero(f);
      for (long s = i; s <= j; ++s) {
        const auto us = static_cast<std::size_t>(s);
        sum += T(s) * (one / ascent_denominator(ths, ui, us)) * (one / descent_denominator(ths, us, uj));
        dual += S(s) * (one / descent_denominator(th, us, uj)) * (one / ascent_denominator(th, ui, us));
      }
      for (long r = std::max<long>(i, 1); r <= std::min(d, j + 1); ++r) {
        const auto ur = static_cast<std::size_t>(r), us = static_cast<std::size_t>(r - 1);
        sum += (one / ascent_denominator(ths, ui, ur)) * phi(r) * (one / descent_denominator(ths, us, uj));
        dual += (one / descent_denominator(th, us, uj)) * phi(r) * (one / ascent_denominator(th, ui, ur));
      }
      out.push_back(scalar_residual("phi_sum", {i, j}, sum));
      out.push_back(scalar_residual("phi_sum_dual", {i, j}, dual));
    }
  }

  const Scalar b1 = params.beta + one;
  for (long j = 2; j <= d; ++j) {
    const Scalar lhs = phi(j - 2) - b1 * phi(j - 1) + b1 * phi(j) - phi(j + 1);
    out.push_back(scalar_residual("phi_recurrence", {j}, lhs - b1 * cubic_coefficient(sys, static_cast<std::size_t>(j))));
  }

  const Matrix &cR = split.calR, &cL = split.calL;
  for (long i = 0; i <= d; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (i >= 1) {
      const Matrix target = phi(i) * F[ui];
      out.push_back(matrix_residual("F_RL", {i}, F[ui] * cR * cL - target));
      out.push_back(matrix_residual("R_F_L", {i}, cR * F[ui - 1] * cL - target));
      out.push_back(matrix_residual("RL_F", {i}, cR * cL * F[ui] - target));
    }
    if (i <= d - 1) {
      const Matrix target = phi(i + 1) * F[ui];
      out.push_back(matrix_residual("F_LR", {i}, F[ui] * cL * cR - target));
      out.push_back(matrix_residual("L_F_R", {i}, cL * F[ui + 1] * cR - target));
      out.push_back(matrix_residual("LR_F", {i}, cL * cR * F[ui] - target));
    }
  }
  return out;
}

}  // namespace tdpair
