#include "rydfermi/scattering/pec.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <thread>

#include "rydfermi/atomic/electron_cloud.hpp"
#include "rydfermi/common/errors.hpp"

namespace rydfermi::scattering {

using atomic::HalfInt;
using atomic::RydbergLevel;
using complex = std::complex<double>;

PecBasis build_pec_basis(const PecBasisOptions& options, const atomic::QuantumDefectTable& defects) {
  options.target.validate();
  if (options.truncation < 1) fail(ErrorKind::ConfigInvalid, "basis truncation must be >= 1");
  const auto species = options.target.species;
  std::vector<HalfInt> mjs = options.mj_values;
  if (mjs.empty()) mjs.push_back(options.target.mj);
  const double target_energy = atomic::level_energy(options.target, defects);

  PecBasis basis;
  basis.truncation = options.truncation;
  basis.states.push_back(options.target);
  std::set<RydbergLevel> seen{options.target};

  const auto add_level = [&](int n, int l) {
    for (int tj : {2 * l - 1, 2 * l + 1}) {
      if (tj < 1) continue;
      for (HalfInt mj : mjs) {
        RydbergLevel level{species, n, l, HalfInt::from_twice(tj), mj};
        if (!level.valid() || seen.count(level)) continue;
        if (options.max_energy_gap > 0.0 &&
            std::abs(atomic::level_energy(level, defects) - target_energy) > options.max_energy_gap)
          continue;
        seen.insert(level);
        basis.states.push_back(level);
      }
    }
  };
  for (const auto& [n, l] : options.neighbours) add_level(n, l);
  for (int n : options.manifold_n) {
    const int l_max = options.manifold_l_max < 0 ? n - 1 : std::min(options.manifold_l_max, n - 1);
    for (int l = std::max(options.manifold_l_min, 0); l <= l_max; ++l) {
      // manifold members are hydrogenic: skip any l that carries a defect
      if (defects.defect(species, l, HalfInt::from_twice(2 * l + 1)) != 0.0 ||
          (l > 0 && defects.defect(species, l, HalfInt::from_twice(2 * l - 1)) != 0.0))
        continue;
      add_level(n, l);
    }
  }
  if (basis.states.size() > basis.truncation)
    fail(ErrorKind::BasisTooLarge, std::to_string(basis.states.size()) + " states exceed the truncation of " +
                                       std::to_string(basis.truncation));
  return basis;
}

namespace {

struct Samples {
  // per point: spin-up / spin-down value and gradient
  std::vector<atomic::SpinorValue> value;
  std::vector<atomic::SpinorGradient> gradient;
};

Samples sample_state(const RydbergLevel& level, const atomic::QuantumDefectTable& defects,
                     const std::vector<atomic::Spherical>& points, bool need_gradient) {
  const atomic::ElectronCloud cloud(atomic::RydbergSuperposition::single(level), defects);
  Samples s;
  s.value.reserve(points.size());
  for (const auto& p : points) s.value.push_back(cloud.amplitude(p));
  if (need_gradient) {
    s.gradient.reserve(points.size());
    for (const auto& p : points) s.gradient.push_back(cloud.gradient(p));
  }
  return s;
}

complex value_product(const atomic::SpinorValue& a, const atomic::SpinorValue& b) {
  return std::conj(a.up) * b.up + std::conj(a.down) * b.down;
}

complex gradient_product(const atomic::SpinorGradient& a, const atomic::SpinorGradient& b) {
  complex sum = 0.0;
  for (int i = 0; i < 3; ++i) sum += std::conj(a.up[i]) * b.up[i] + std::conj(a.down[i]) * b.down[i];
  return sum;
}

struct SampledBasis {
  std::vector<Samples> samples;
  std::vector<double> s_coupling;  // per point
  std::vector<double> p_coupling;
};

SampledBasis sample_basis(const PecBasis& basis, const std::vector<Vec3>& positions, const ScatteringModel& model,
                          const atomic::QuantumDefectTable& defects, const PecOptions& options) {
  if (basis.states.empty()) fail(ErrorKind::ConfigInvalid, "PEC basis is empty");
  if (basis.states.size() > basis.truncation)
    fail(ErrorKind::BasisTooLarge, "PEC basis exceeds its truncation");
  model.validate();
  const std::size_t dim = basis.states.size();

  // k follows the target level, as for a single-state evaluation
  const double n_eff = atomic::effective_n(basis.states.front(), defects);
  SampledBasis out;
  std::vector<atomic::Spherical> points;
  for (const Vec3& x : positions) {
    const atomic::Spherical p = to_spherical(x);
    if (!(p.r > 0.0)) fail(ErrorKind::NumericalError, "ground atom placed on the Rydberg core");
    points.push_back(p);
    const ElectronMomentum k = local_momentum(n_eff, p.r, options.pseudopotential.k_min);
    const PhaseShifts shifts = phase_shifts(model, k, options.pseudopotential.strict);
    out.s_coupling.push_back(2.0 * std::numbers::pi * shifts.tan_s / k.k);
    out.p_coupling.push_back(-6.0 * std::numbers::pi * shifts.tan_p / (k.k * k.k * k.k));
  }
  const bool need_gradient =
      std::any_of(out.p_coupling.begin(), out.p_coupling.end(), [](double c) { return c != 0.0; });

  // one radial solve per state, sampled and released
  out.samples.resize(dim);
  const auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t a = first; a < dim; a += stride)
      out.samples[a] = sample_state(basis.states[a], defects, points, need_gradient);
  };
  const std::size_t threads = static_cast<std::size_t>(std::clamp(options.threads, 1, static_cast<int>(dim)));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  return out;
}

// fixed summation order over atoms, independent of threading
Eigen::MatrixXcd contact_matrix(const SampledBasis& sb, std::size_t first_point, std::size_t n_points) {
  const auto dim = static_cast<Eigen::Index>(sb.samples.size());
  Eigen::MatrixXcd V = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index a = 0; a < dim; ++a) {
    const Samples& sa = sb.samples[static_cast<std::size_t>(a)];
    for (Eigen::Index b = a; b < dim; ++b) {
      const Samples& sbb = sb.samples[static_cast<std::size_t>(b)];
      complex v = 0.0;
      for (std::size_t p = first_point; p < first_point + n_points; ++p) {
        v += sb.s_coupling[p] * value_product(sa.value[p], sbb.value[p]);
        if (sb.p_coupling[p] != 0.0) v += sb.p_coupling[p] * gradient_product(sa.gradient[p], sbb.gradient[p]);
      }
      V(a, b) = v;
      if (b != a) V(b, a) = std::conj(v);
    }
  }
  return V;
}

}  // namespace

Eigen::MatrixXcd interaction_matrix(const PecBasis& basis, const std::vector<Vec3>& ground_atoms,
                                    const ScatteringModel& model, const atomic::QuantumDefectTable& defects,
                                    PecOptions options) {
  if (ground_atoms.empty()) fail(ErrorKind::ConfigInvalid, "need at least one ground atom");
  const SampledBasis sb = sample_basis(basis, ground_atoms, model, defects, options);
  return contact_matrix(sb, 0, ground_atoms.size());
}

PecResult pec(const PecBasis& basis, const std::vector<Vec3>& ground_atom_directions,
              const std::vector<double>& separations, const ScatteringModel& model,
              const atomic::QuantumDefectTable& defects, PecOptions options) {
  if (ground_atom_directions.empty()) fail(ErrorKind::ConfigInvalid, "PEC needs at least one ground atom");
  const std::size_t dim = basis.states.size();
  const std::size_t n_atoms = ground_atom_directions.size();
  const std::size_t n_sep = separations.size();

  std::vector<Vec3> positions;
  positions.reserve(n_sep * n_atoms);
  for (double R : separations) {
    if (!(R > 0.0)) fail(ErrorKind::ConfigInvalid, "separations must be positive");
    for (const Vec3& u : ground_atom_directions) {
      const double norm = std::sqrt(u.x * u.x + u.y * u.y + u.z * u.z);
      if (!(norm > 0.0)) fail(ErrorKind::ConfigInvalid, "ground-atom direction must be nonzero");
      positions.push_back({R * u.x / norm, R * u.y / norm, R * u.z / norm});
    }
  }
  const SampledBasis sb = sample_basis(basis, positions, model, defects, options);

  PecResult result;
  result.separations = separations;
  for (const auto& level : basis.states) result.unperturbed.push_back(atomic::level_energy(level, defects));
  result.sorted.resize(static_cast<Eigen::Index>(n_sep), static_cast<Eigen::Index>(dim));
  result.adiabatic.resize(static_cast<Eigen::Index>(n_sep), static_cast<Eigen::Index>(dim));

  Eigen::MatrixXcd previous_vectors;
  std::vector<Eigen::Index> previous_order;
  for (std::size_t i = 0; i < n_sep; ++i) {
    Eigen::MatrixXcd H = contact_matrix(sb, i * n_atoms, n_atoms);
    for (std::size_t a = 0; a < dim; ++a)
      H(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a)) += result.unperturbed[a];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H);
    if (solver.info() != Eigen::Success)
      fail(ErrorKind::NumericalError, "PEC eigensolver failed at R=" + std::to_string(separations[i]));
    const auto& values = solver.eigenvalues();
    const auto& vectors = solver.eigenvectors();
    for (Eigen::Index k = 0; k < values.size(); ++k) result.sorted(static_cast<Eigen::Index>(i), k) = values(k);

    // adiabatic following: greedy maximum-overlap assignment to the previous step
    std::vector<Eigen::Index> order(static_cast<std::size_t>(dim));
    if (i == 0) {
      for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(dim); ++k) order[static_cast<std::size_t>(k)] = k;
    } else {
      const Eigen::MatrixXd overlaps = (previous_vectors.adjoint() * vectors).cwiseAbs();
      std::vector<bool> used(dim, false);
      std::vector<bool> assigned(dim, false);
      for (std::size_t round = 0; round < dim; ++round) {
        double best = -1.0;
        Eigen::Index best_curve = 0, best_vec = 0;
        for (Eigen::Index c = 0; c < static_cast<Eigen::Index>(dim); ++c) {
          if (assigned[static_cast<std::size_t>(c)]) continue;
          const Eigen::Index prev_vec = previous_order[static_cast<std::size_t>(c)];
          for (Eigen::Index v = 0; v < static_cast<Eigen::Index>(dim); ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            if (overlaps(prev_vec, v) > best) {
              best = overlaps(prev_vec, v);
              best_curve = c;
              best_vec = v;
            }
          }
        }
        assigned[static_cast<std::size_t>(best_curve)] = true;
        used[static_cast<std::size_t>(best_vec)] = true;
        order[static_cast<std::size_t>(best_curve)] = best_vec;
      }
    }
    for (Eigen::Index c = 0; c < static_cast<Eigen::Index>(dim); ++c)
      result.adiabatic(static_cast<Eigen::Index>(i), c) = values(order[static_cast<std::size_t>(c)]);
    previous_vectors = vectors;
    previous_order = order;
  }
  return result;
}

}  // namespace rydfermi::scattering
