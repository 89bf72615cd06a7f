#include "gravicat/catalog.hpp"

namespace gravicat {

namespace {

// Ten reference systems spanning the mechanical oscillators that have
// been coupled to superconducting circuits: GHz acoustics (a-e), a
// low-frequency bulk acoustic mode (f), a drum (g), a beam (h) and two
// membranes (i, j). Values quoted in the source experiments are carried
// verbatim; effective masses that the experiments do not state directly
// are estimates from device geometry, flagged as such in the notes.
// Bath temperature defaults to a 10 mK dilution refrigerator unless a
// record overrides it.
constexpr std::string_view kBuiltinCatalog = R"(# gravicat built-in oscillator catalog

id: hbar-sapphire
label: Sapphire high-overtone bulk acoustic resonator
f_m_hz: 6.65e9
mass_kg: 5e-8
q_factor: 4e6
material: Al
notes: Mass estimated from the substrate volume under the piezoelectric transducer disk of Chu et al. (2017); quality factor from the multi-phonon follow-up (Chu et al. 2018). Sapphire modeled with the aluminum nucleus.

id: fbar-aluminum-nitride
label: Suspended film bulk acoustic resonator
f_m_hz: 6.175e9
mass_kg: 5e-12
q_factor: 260
material: Al
notes: Ground-state piezoelectric resonator of O'Connell et al. (2010); compliant volume and effective mass estimated from the deposited film thicknesses and the area of motion.

id: omc-nanobeam
label: Silicon optomechanical crystal nanobeam
f_m_hz: 5.3e9
mass_kg: 1.4e-16
q_factor: 8e5
material: Si
notes: Phononic-bandgap-shielded device of MacCabe et al. (2019); the quality factor quoted here is decoherence-rate based, the energy-decay lifetime is far longer.

id: pnc-defect
label: Phononic crystal defect resonator
f_m_hz: 2.3e9
mass_kg: 2e-16
q_factor: 3e4
material: other:30
notes: Lithium-niobate-on-silicon defect mode of Arrangoiz-Arriola et al. (2019); effective mass estimated from film thickness and defect motional area; mean mass number 30 stands in for LiNbO3.

id: saw-resonator
label: Surface acoustic wave resonator
f_m_hz: 3e8
mass_kg: 2.8e-10
q_factor: 4e4
material: Si
notes: Effective mass back-computed from the zero-point fluctuations and frequency quoted by Noguchi et al. (2017); quality factor representative of Shao et al. (2019). Quartz modeled with the silicon nucleus.

id: baw-quartz
label: Quartz bulk acoustic wave resonator, low-frequency mode
f_m_hz: 1e7
mass_kg: 5e-6
q_factor: 1e9
material: Si
notes: Low-order mode of the centimeter-scale quartz plates of Goryachev and Tobar (2014); effective mass estimated from the plate geometry. Quartz modeled with the silicon nucleus.

id: teufel-drum
label: Aluminum drum electromechanical resonator
f_m_hz: 1e7
mass_kg: 5e-14
q_factor: 7e5
material: Al
notes: Frequency and mass from Teufel et al. (2011); quality factor from Clark et al. (2017).

id: pnc-beam
label: Strain-engineered silicon nitride nanobeam
f_m_hz: 1.33e6
mass_kg: 1e-15
q_factor: 8e8
material: SiN
t_bath_k: 300
notes: Soft-clamped phononic crystal beam of Ghadimi et al. (2018); effective mass estimated from the defect mode volume. Quality factor measured at room temperature, bath set accordingly.

id: soft-clamped-membrane
label: Soft-clamped silicon nitride membrane
f_m_hz: 1e6
mass_kg: 2e-12
q_factor: 1e9
material: SiN
notes: Values from Chen et al. (2020); the quality factor was demonstrated at 10 K, the evaluation assumes the standard 10 mK dilution-refrigerator bath.

id: sinx-membrane-large
label: Millimeter-scale high-stress SiNx membrane
f_m_hz: 2e5
mass_kg: 5e-10
q_factor: 1e8
material: SiN
notes: Frequency and mass from the chip-scale membranes of Yuan et al. (2015); quality factor from the same family of high-stress SiNx resonators.
)";

}  // namespace

std::string_view builtin_catalog_text() { return kBuiltinCatalog; }

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries =
      load_catalog(kBuiltinCatalog);
  return entries;
}

}  // namespace gravicat
