#pragma once

#include <array>

namespace reference {

// Chain on [0, 1]: first five nonzero eigenvalues for N = 10, 100, 500.
inline constexpr std::array<int, 3> kChainPoints{10, 100, 500};

inline constexpr std::array<std::array<double, 5>, 3> kDirichlet{{
    {3.1286893, 6.1803398, 9.0798099, 11.7557050, 14.1421356},
    {3.1414634, 6.2821518, 9.4212901, 12.5581039, 15.6918191},
    {3.1415874, 6.2831439, 9.4246384, 12.5660398, 15.7073173},
}};

inline constexpr std::array<std::array<double, 5>, 3> kNeumann{{
    {3.4729635, 6.8404028, 9.9999999, 12.8557521, 15.3208888},
    {3.1731927, 6.3455866, 9.5163831, 12.6847839, 15.8499913},
    {3.1478832, 6.2957352, 9.4435249, 12.5912209, 15.7387923},
}};

// Star with edge lengths 0.8, 1.1, 1.5 and lambda = 0: first five secular roots.
inline constexpr std::array<double, 3> kStarLengths{0.8, 1.1, 1.5};
inline constexpr std::array<double, 3> kStarSteps{0.1, 0.01, 0.005};

inline constexpr std::array<double, 5> kStarContinuous{1.1799688, 1.6768750, 2.0943951, 2.7486684, 2.8559933};

inline constexpr std::array<std::array<double, 5>, 3> kStar{{
    {1.2293914, 1.7771792, 2.0905692, 2.8462967, 2.9088003},
    {1.1847666, 1.6865131, 2.0943568, 2.7654332, 2.8558962},
    {1.1823638, 1.6816835, 2.0943855, 2.7570666, 2.8559690},
}};

}  // namespace reference
