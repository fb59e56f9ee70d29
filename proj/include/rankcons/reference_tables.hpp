#ifndef RANKCONS_REFERENCE_TABLES_HPP
#define RANKCONS_REFERENCE_TABLES_HPP

// Published kappa grids for the bundled datasets, gamma and lambda both
// running 1, 0.95, ..., 0.45. Rows are gamma, columns lambda. Values are
// rounded to 3 decimals.

#include <array>
#include <optional>
#include <span>
#include <string_view>

namespace rankcons {

struct ReferenceGrid {
  std::string_view dataset;
  std::array<std::array<double, 12>, 12> kappa;

  static constexpr double axis(std::size_t i) noexcept {
    return 1.0 - 0.05 * static_cast<double>(i);
  }
};

inline constexpr ReferenceGrid kClusteringCe{
    "clustering-ce",
    {{
     {19, 17.589, 16.376, 15.336, 14.448, 13.692, 13.05, 12.508, 12.05, 11.666, 11.344, 11.076},
     {17.945, 16.534, 15.321, 14.282, 13.394, 12.637, 11.996, 11.453, 10.996, 10.611, 10.29, 10.021},
     {16.964, 15.553, 14.34, 13.301, 12.413, 11.657, 11.015, 10.472, 10.015, 9.631, 9.309, 9.04},
     {16.055, 14.644, 13.431, 12.391, 11.503, 10.747, 10.105, 9.563, 9.105, 8.721, 8.399, 8.13},
     {15.213, 13.803, 12.589, 11.55, 10.662, 9.906, 9.264, 8.721, 8.264, 7.88, 7.558, 7.289},
     {14.438, 13.027, 11.814, 10.775, 9.886, 9.13, 8.489, 7.946, 7.489, 7.104, 6.782, 6.514},
     {13.726, 12.315, 11.102, 10.063, 9.174, 8.418, 7.777, 7.234, 6.777, 6.392, 6.07, 5.802},
     {13.075, 11.664, 10.451, 9.411, 8.523, 7.767, 7.125, 6.583, 6.125, 5.741, 5.419, 5.151},
     {12.482, 11.071, 9.858, 8.818, 7.93, 7.174, 6.532, 5.99, 5.532, 5.148, 4.826, 4.557},
     {11.944, 10.533, 9.32, 8.281, 7.392, 6.636, 5.995, 5.452, 4.995, 4.61, 4.288, 4.02},
     {11.46, 10.049, 8.836, 7.796, 6.908, 6.152, 5.51, 4.967, 4.51, 4.126, 3.804, 3.535},
     {11.026, 9.615, 8.402, 7.362, 6.474, 5.718, 5.076, 4.533, 4.076, 3.692, 3.37, 3.101},
    }}};

inline constexpr ReferenceGrid kClusteringGa{
    "clustering-ga",
    {{
     {19, 17.534, 16.28, 15.211, 14.303, 13.536, 12.889, 12.346, 11.892, 11.514, 11.201, 10.942},
     {17.966, 16.5, 15.246, 14.177, 13.27, 12.502, 11.855, 11.312, 10.859, 10.481, 10.167, 9.908},
     {17.007, 15.541, 14.287, 13.218, 12.31, 11.543, 10.896, 10.353, 9.899, 9.521, 9.208, 8.949},
     {16.119, 14.653, 13.399, 12.33, 11.422, 10.655, 10.008, 9.465, 9.011, 8.634, 8.32, 8.061},
     {15.3, 13.834, 12.58, 11.511, 10.603, 9.835, 9.189, 8.646, 8.192, 7.814, 7.501, 7.242},
     {14.546, 13.08, 11.826, 10.757, 9.85, 9.082, 8.435, 7.892, 7.439, 7.061, 6.747, 6.488},
     {13.856, 12.39, 11.136, 10.066, 9.159, 8.391, 7.744, 7.202, 6.748, 6.37, 6.057, 5.797},
     {13.225, 11.759, 10.505, 9.436, 8.528, 7.76, 7.114, 6.571, 6.117, 5.739, 5.426, 5.167},
     {12.651, 11.186, 9.931, 8.862, 7.955, 7.187, 6.54, 5.997, 5.544, 5.166, 4.852, 4.593},
     {12.132, 10.666, 9.412, 8.343, 7.435, 6.668, 6.021, 5.478, 5.025, 4.647, 4.333, 4.074},
     {11.664, 10.199, 8.944, 7.875, 6.968, 6.2, 5.553, 5.011, 4.557, 4.179, 3.865, 3.606},
     {11.245, 9.779, 8.525, 7.456, 6.549, 5.781, 5.134, 4.591, 4.138, 3.76, 3.446, 3.187},
    }}};

inline constexpr ReferenceGrid kSearchGoogle{
    "search-google",
    {{
     {33, 24.502, 19.136, 15.698, 13.438, 11.896, 10.798, 9.982, 9.351, 8.85, 8.446, 8.117},
     {32.475, 23.977, 18.611, 15.173, 12.913, 11.371, 10.274, 9.457, 8.826, 8.325, 7.921, 7.592},
     {31.982, 23.483, 18.118, 14.68, 12.42, 10.878, 9.78, 8.964, 8.333, 7.832, 7.428, 7.099},
     {31.518, 23.02, 17.654, 14.216, 11.956, 10.414, 9.316, 8.5, 7.869, 7.368, 6.964, 6.635},
     {31.081, 22.583, 17.217, 13.779, 11.519, 9.977, 8.879, 8.063, 7.432, 6.931, 6.527, 6.198},
     {30.669, 22.17, 16.805, 13.367, 11.107, 9.565, 8.467, 7.65, 7.02, 6.519, 6.114, 5.785},
     {30.279, 21.781, 16.415, 12.977, 10.717, 9.175, 8.078, 7.261, 6.63, 6.129, 5.725, 5.396},
     {29.91, 21.412, 16.046, 12.608, 10.348, 8.806, 7.709, 6.892, 6.261, 5.76, 5.356, 5.027},
     {29.56, 21.061, 15.696, 12.258, 9.998, 8.456, 7.358, 6.542, 5.911, 5.41, 5.005, 4.676},
     {29.226, 20.728, 15.362, 11.925, 9.664, 8.123, 7.025, 6.208, 5.577, 5.076, 4.672, 4.343},
     {28.908, 20.41, 15.044, 11.607, 9.346, 7.805, 6.707, 5.89, 5.259, 4.758, 4.354, 4.025},
     {28.604, 20.105, 14.74, 11.302, 9.042, 7.5, 6.402, 5.586, 4.955, 4.454, 4.049, 3.721},
    }}};

inline constexpr ReferenceGrid kSearchBing{
    "search-bing",
    {{
     {23, 16.392, 12.835, 10.887, 9.788, 9.143, 8.745, 8.49, 8.32, 8.207, 8.13, 8.079},
     {22.147, 15.539, 11.982, 10.034, 8.935, 8.29, 7.892, 7.637, 7.467, 7.354, 7.277, 7.226},
     {21.355, 14.747, 11.189, 9.242, 8.143, 7.497, 7.1, 6.844, 6.675, 6.561, 6.484, 6.433},
     {20.62, 14.012, 10.455, 8.507, 7.409, 6.763, 6.365, 6.11, 5.941, 5.827, 5.75, 5.699},
     {19.942, 13.334, 9.777, 7.829, 6.731, 6.085, 5.687, 5.432, 5.263, 5.149, 5.072, 5.021},
     {19.318, 12.71, 9.152, 7.205, 6.106, 5.46, 5.063, 4.807, 4.638, 4.524, 4.448, 4.396},
     {18.745, 12.137, 8.58, 6.632, 5.534, 4.888, 4.49, 4.235, 4.066, 3.952, 3.875, 3.824},
     {18.222, 11.614, 8.057, 6.109, 5.01, 4.365, 3.967, 3.712, 3.542, 3.429, 3.352, 3.301},
     {17.746, 11.138, 7.581, 5.633, 4.535, 3.889, 3.491, 3.236, 3.067, 2.953, 2.876, 2.825},
     {17.316, 10.708, 7.15, 5.203, 4.104, 3.458, 3.061, 2.805, 2.636, 2.522, 2.446, 2.394},
     {16.928, 10.321, 6.763, 4.816, 3.717, 3.071, 2.673, 2.418, 2.249, 2.135, 2.058, 2.007},
     {16.582, 9.974, 6.417, 4.469, 3.371, 2.725, 2.327, 2.072, 1.903, 1.789, 1.712, 1.661},
    }}};

inline constexpr std::array<const ReferenceGrid*, 4> kReferenceGrids{
    &kClusteringCe, &kClusteringGa, &kSearchGoogle, &kSearchBing};

inline std::optional<ReferenceGrid> reference_grid(std::string_view dataset) {
  for (const auto* g : kReferenceGrids) {
    if (g->dataset == dataset) return *g;
  }
  return std::nullopt;
}

}  // namespace rankcons

#endif  // RANKCONS_REFERENCE_TABLES_HPP
