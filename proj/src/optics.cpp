#include "lanheat/optics.hpp"

#include <cmath>
#include <numbers>

#include "lanheat/errors.hpp"

namespace lanheat {

using cplx = std::complex<double>;

void LayerStack::validate() const {
  if (layers.size() < 2) throw ValidationError("stack", "needs at least incidence and exit media");
  if (layers.front().thickness || layers.back().thickness) {
    throw ValidationError("stack", "first and last media must be semi-infinite");
  }
  for (std::size_t i = 1; i + 1 < layers.size(); ++i) {
    const auto& d = layers[i].thickness;
    if (!d) throw ValidationError("stack.layer" + std::to_string(i), "interior layer needs a thickness");
    if (!(*d >= 0.0) || !std::isfinite(*d)) {
      throw ValidationError("stack.layer" + std::to_string(i), "thickness must be non-negative");
    }
  }
}

FresnelCoefficients fresnel_interface(const ComplexIndex& a, const ComplexIndex& b) {
  const cplx na = a.value();
  const cplx nb = b.value();
  const cplx sum = na + nb;
  if (std::abs(sum) == 0.0) throw ValidationError("interface", "degenerate interface (n_a + n_b = 0)");
  return {2.0 * na / sum, (na - nb) / sum};
}

cplx layer_phase(const ComplexIndex& n, double thickness, double wavelength) {
  return 2.0 * std::numbers::pi * n.value() * thickness / wavelength;
}

double FieldSolution::net_flux(std::size_t m) const {
  const cplx n = index[m];
  const auto& [fwd, bwd] = amplitudes[m];
  // Re(E H*) with E = E+ + E-, H ~ n (E+ - E-).
  return n.real() * (std::norm(fwd) - std::norm(bwd)) + 2.0 * n.imag() * std::imag(bwd * std::conj(fwd));
}

FieldSolution solve_stack(const LayerStack& stack, WavelengthNm nm) {
  stack.validate();
  const double lambda = wavelength_to_meters(nm);
  const std::size_t count = stack.layers.size();

  std::vector<ComplexIndex> idx;
  idx.reserve(count);
  for (const auto& layer : stack.layers) idx.push_back(layer.material.index_at(nm));

  FieldSolution sol;
  sol.wavelength_nm = nm;
  sol.amplitudes.resize(count);
  for (const auto& i : idx) sol.index.push_back(i.value());

  // Unit transmitted wave in the exit medium, then walk back towards the
  // incidence side: interface m, then propagation through medium m-1.
  sol.amplitudes[count - 1] = {1.0, 0.0};
  for (std::size_t m = count - 1; m >= 1; --m) {
    const auto [t, r] = fresnel_interface(idx[m - 1], idx[m]);
    const double d = stack.layers[m - 1].thickness.value_or(0.0);
    const cplx phase = std::exp(cplx(0.0, 1.0) * layer_phase(idx[m - 1], d, lambda));
    const auto& [fwd, bwd] = sol.amplitudes[m];
    sol.amplitudes[m - 1] = {(fwd + r * bwd) / (t * phase), (r * fwd + bwd) * phase / t};
  }

  const cplx incident = sol.amplitudes[0].forward;
  if (!std::isfinite(std::abs(incident)) || std::abs(incident) == 0.0) {
    throw SolverError("field recursion overflowed at " + std::to_string(nm) + " nm (stack too opaque)");
  }
  for (auto& a : sol.amplitudes) {
    a.forward /= incident;
    a.backward /= incident;
  }
  sol.amplitudes[0].forward = 1.0;
  return sol;
}

double AbsorbanceReport::deposited_fraction(std::size_t m) const {
  const double a = absorbance.at(m);
  return accounting == TransmissivityAccounting::kSeparate ? a * air_quartz_transmissivity : a;
}

AbsorbanceReport layer_absorbances(const FieldSolution& sol, const LayerStack& stack,
                                   const AbsorbanceOptions& options) {
  const std::size_t count = sol.amplitudes.size();
  if (count != stack.layers.size()) throw ValidationError("stack", "field solution does not match stack");
  if (sol.index.front().imag() != 0.0) {
    throw ValidationError("stack.layer0", "incidence medium must be non-absorbing");
  }

  AbsorbanceReport rep;
  rep.wavelength_nm = sol.wavelength_nm;
  rep.accounting = options.accounting;
  for (const auto& layer : stack.layers) rep.layer_names.push_back(layer.material.name);

  const double incident = sol.index.front().real();
  rep.reflectance = std::norm(sol.amplitudes.front().backward);
  rep.absorbance.assign(count, 0.0);
  for (std::size_t m = 1; m + 1 < count; ++m) {
    // A lossless layer absorbs nothing; the flux difference would only be rounding.
    if (sol.index[m].imag() > 0.0) rep.absorbance[m] = (sol.net_flux(m) - sol.net_flux(m + 1)) / incident;
  }
  const double transmitted = sol.net_flux(count - 1) / incident;
  if (sol.index.back().imag() > 0.0) {
    rep.absorbance.back() = transmitted;
  } else {
    rep.transmittance = transmitted;
  }

  rep.air_quartz_transmissivity = air_quartz_transmissivity(stack.layers.front().material.index_at(sol.wavelength_nm),
                                                            options.ambient);
  if (options.accounting == TransmissivityAccounting::kIncluded) {
    for (auto& a : rep.absorbance) a *= rep.air_quartz_transmissivity;
    rep.reflectance = 1.0 - rep.air_quartz_transmissivity * (1.0 - rep.reflectance);
    rep.transmittance *= rep.air_quartz_transmissivity;
  }
  rep.substrate_absorption = rep.absorbance.back();
  return rep;
}

double air_quartz_transmissivity(const ComplexIndex& quartz, const ComplexIndex& ambient) {
  const double n0 = ambient.n;
  const double nq = quartz.n;
  return 4.0 * n0 * nq / ((n0 + nq) * (n0 + nq));
}

AbsorbanceReport analyze_stack(const LayerStack& stack, WavelengthNm nm, const AbsorbanceOptions& options) {
  return layer_absorbances(solve_stack(stack, nm), stack, options);
}

}  // namespace lanheat
