#ifndef SPP_CONSTANTS_HPP
#define SPP_CONSTANTS_HPP

#include <complex>
#include <numbers>

namespace spp {

using cplx = std::complex<double>;

// Unit system: energies, Rabi frequencies, decay rates and detunings in meV;
// lengths in nm; wavevectors in nm^-1; times in fs; velocities in nm/fs.
inline constexpr double pi = std::numbers::pi;

// Photon energy <-> vacuum wavelength: E = hc / lambda.
inline constexpr double hc_mev_nm = 1239841.98;

inline constexpr double c_nm_fs = 299.792458;

// hbar derived from hc and c so that k0 = 2*pi*E/hc and vg = 1/(hbar dk/dE)
// are mutually consistent to machine precision.
inline constexpr double hbar_mev_fs = hc_mev_nm / (2.0 * pi * c_nm_fs);

constexpr double deg_to_rad(double deg) { return deg * pi / 180.0; }

} // namespace spp

#endif
