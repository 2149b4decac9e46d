#pragma once

// Reference values from tests/oracles/compute_oracles.py (mpmath, 40 digits).
namespace oracle {

inline constexpr double kN_03_2 = 0.71766023632390547262;
inline constexpr double kN_025_1 = 0.19849721357880328563;
inline constexpr double kN_05_1 = 0.26967630059418967833;
inline constexpr double kN_07_3 = 0.97437760725553059631;
inline constexpr double kN_04_15 = 0.55749338257652654773;
inline constexpr double kN_05_4 = 1.1892071150027210667;
inline constexpr double kBeta_04_2_2_3 = 0.73091749214460252440;

inline constexpr double kSineSq_1_0 = 0.12900613773279795674;
inline constexpr double kSineSqLimit = 0.079577471545947667884;

struct HsCase {
  int j;
  double s;
  double value;
};
inline constexpr HsCase kHs[] = {
    {1, 0.5, 1.6561918731252081817},  {1, 0.01, 1.0084873733906195275},
    {1, 0.99, 3.2441216397053568089}, {1, 0.25, 1.2599639193146159920},
    {2, 0.5, 2.4041588073157958692},  {2, 0.01, 1.0168128352931069747},
    {2, 0.99, 6.2310790848122624797}, {2, 0.25, 1.5337027727146866387},
};

inline constexpr double kBumpE0 = 1.4057052527733514346;
inline constexpr double kBumpE1 = 6.5530823255787950687;
inline constexpr double kBumpE2 = 453.46705024093858989;

}  // namespace oracle
