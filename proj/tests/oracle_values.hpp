// Values frozen from tests/oracle/compute_expected.py (mpmath, 40 digits).
#ifndef WGM_TESTS_ORACLE_VALUES_HPP
#define WGM_TESTS_ORACLE_VALUES_HPP

#include <cstdint>

namespace oracle
{
inline constexpr double n_e_1560_295k = 2.1373000099912496;
inline constexpr double n_o_1560_295k = 2.2107752721476198;
inline constexpr double n_d_1560 = 2.3854818819598459;
inline constexpr double fsr_hz = 12402317401.842162;
inline constexpr double pump_hz = 192174652564102.56;
inline constexpr std::int64_t pump_l = 15495;
inline constexpr double theta_deg = 63.632204331417948;
inline constexpr double rim_radius_m = 0.00035505526826165393;
inline constexpr double fringe_ratio = 2.2515846126935682;

// mode frequencies at L_p - 1, L_p, L_p + 1
inline constexpr double order0_modes[3] = {192161775837866.7974, 192173923431203.72496, 192186071012198.80167};
inline constexpr double order0_second_diff = -12341.8508534;
inline constexpr double order1_modes[3] = {192607809832967.4028, 192619966566465.61337, 192632123287071.36345};
inline constexpr double order1_second_diff = -12892.4604988;
inline constexpr double const_index_2p2_order1_second_diff = -409.491543149229;

inline constexpr double contrast_undercoupled = 0.9607843137254902;
inline constexpr double contrast_overcoupled = 1.0408163265306122;
inline constexpr double dip_at_0p9608 = 0.00039967366919571375;

inline constexpr double two_kt_300 = 8.283894e-21;
inline constexpr double kt_over_h_300 = 6250985736998.2719;
inline constexpr double one_thz_in_k = 47.992430733662212;
inline constexpr double nu_min_2mhz_5ns = 125019714739.96544;
inline constexpr double nu_min_projected_q = 120128101219.08035;
inline constexpr double nep_paper_inputs = 6.488657934858145e-16;
inline constexpr double gap_reference = 5.17743375e-6;
inline constexpr double gap_formula = 1.2766729396378794e-5;
inline constexpr double max_bw_reference = 1.3005206008695652;
inline constexpr double max_bw_unity_16ns = 505520.2703945753;

inline constexpr double eta_n_anti_stokes = 2.6295564607935131e-6;
inline constexpr double eta_n_stokes = 2.6323251998880231e-6;
inline constexpr double eta_n_both = 5.2618816606815362e-6;
inline constexpr double eta_n_ref11 = 3.6998972250770812e-9;
inline constexpr double pump_to_sideband_db = 39.030899869919436;
} // namespace oracle

#endif
