#include "pepcd/asymptotics.hpp"

#include <cmath>
#include <numeric>

namespace pepcd {

namespace tables {

namespace {

// (p + q sqrt(d)) / s
// functions rather than globals: the tables may be built during static init
std::vector<SurdBreakpoint> mean_breaks() {
  return {
      {1, 0, 1, 1}, {4, 0, 1, 3}, {3, 0, 1, 2}, {2, 0, 1, 1},
  };
}

std::vector<SurdBreakpoint> covariance_breaks() {
  return {
    {1, 0, 1, 1},   // 1
    {0, 2, 3, 3},   // 2/sqrt3
    {6, 0, 1, 5},   // 6/5
    {-1, 1, 5, 1},  // sqrt5 - 1
    {6, 2, 2, 7},   // (6 + 2 sqrt2)/7
    {4, 0, 1, 3},   // 4/3
    {6, 1, 15, 7},  // (6 + sqrt15)/7
    {3, 0, 1, 2},   // 3/2
    {1, 1, 5, 2},   // golden ratio
    {2, 1, 2, 2},   // 1 + 1/sqrt2
    {2, 0, 1, 1},   // 2
  };
}

}  // namespace

// Coefficients below are exact integers, ascending powers of r, factored.
// Every piece is cross-checked against numerical quadrature in the tests.

const PiecewiseRational& edge_probability_and() {
  static const PiecewiseRational table(
      mean_breaks(),
      {
          RationalPiece{-1, 54,
                        {{{-1, 1}, 1}, {{128, -232, -178, 245, -148, 5}, 1}},
                        {{{1, 1}, 1}, {{2, 1}, 1}, {{0, 1}, 2}}},
          RationalPiece{-1, 216,
                        {{{672, -536, -732, 1302, -801, 101}, 1}},
                        {{{0, 1}, 1}, {{1, 1}, 1}, {{2, 1}, 1}}},
          RationalPiece{1, 8,
                        {{{96, -368, 288, 264, -448, 148, 30, -13, 1}, 1}},
                        {{{1, 1}, 1}, {{2, 1}, 1}, {{0, 1}, 4}}},
          RationalPiece{1, 1,
                        {{{-1, 1}, 2}, {{-2, 2, 3, 1}, 1}},
                        {{{1, 1}, 1}, {{0, 1}, 4}}},
      });
  return table;
}

const PiecewiseRational& edge_probability_or() {
  static const PiecewiseRational table(
      mean_breaks(),
      {
          RationalPiece{1, 108,
                        {{{-256, 720, -108, -846, 860, -195, 47}, 1}},
                        {{{1, 1}, 1}, {{2, 1}, 1}, {{0, 1}, 2}}},
          RationalPiece{1, 216,
                        {{{672, -536, -732, 1450, -579, 175}, 1}},
                        {{{0, 1}, 1}, {{1, 1}, 1}, {{2, 1}, 1}}},
          RationalPiece{-1, 8,
                        {{{96, -368, 144, 304, -264, 84, -30, -7, 3}, 1}},
                        {{{1, 1}, 1}, {{2, 1}, 1}, {{0, 1}, 4}}},
          RationalPiece{1, 1,
                        {{{2, -6, 0, 0, 1, 1}, 1}},
                        {{{1, 1}, 1}, {{0, 1}, 4}}},
      });
  return table;
}

const PiecewiseRational& kernel_variance_and() {
  static const PiecewiseRational table(
      mean_breaks(),
      {
          RationalPiece{-1, 2916,
                        {{{-1, 1}, 1}, {{128, -232, -178, 245, -148, 5}, 1}, {{-128, 360, 54, -261, 447, -153, 5}, 1}},
                        {{{1, 1}, 2}, {{2, 1}, 2}, {{0, 1}, 4}}},
          RationalPiece{-1, 46656,
                        {{{672, -536, -732, 1302, -801, 101}, 1}, {{672, -104, -84, 1518, -801, 101}, 1}},
                        {{{0, 1}, 2}, {{1, 1}, 2}, {{2, 1}, 2}}},
          RationalPiece{-1, 64,
                        {{{96, -368, 288, 264, -464, 124, 22, -13, 1}, 1}, {{96, -368, 288, 264, -448, 148, 30, -13, 1}, 1}},
                        {{{1, 1}, 2}, {{2, 1}, 2}, {{0, 1}, 8}}},
          RationalPiece{1, 1,
                        {{{-1, 1}, 2}, {{-2, 2, 3, 1}, 1}, {{2, -6, 3, 3}, 1}},
                        {{{1, 1}, 2}, {{0, 1}, 8}}},
      });
  return table;
}

const PiecewiseRational& kernel_variance_or() {
  static const PiecewiseRational table(
      mean_breaks(),
      {
          RationalPiece{-1, 11664,
                        {{{-256, 720, -324, -1170, 752, -195, 47}, 1}, {{-256, 720, -108, -846, 860, -195, 47}, 1}},
                        {{{1, 1}, 2}, {{2, 1}, 2}, {{0, 1}, 4}}},
          RationalPiece{-1, 46656,
                        {{{672, -968, -1380, 1234, -579, 175}, 1}, {{672, -536, -732, 1450, -579, 175}, 1}},
                        {{{0, 1}, 2}, {{1, 1}, 2}, {{2, 1}, 2}}},
          RationalPiece{-1, 64,
                        {{{96, -368, 144, 304, -264, 84, -30, -7, 3}, 1}, {{96, -368, 144, 304, -248, 108, -22, -7, 3}, 1}},
                        {{{1, 1}, 2}, {{2, 1}, 2}, {{0, 1}, 8}}},
          RationalPiece{2, 1,
                        {{{-1, 3}, 1}, {{2, -6, 0, 0, 1, 1}, 1}},
                        {{{1, 1}, 2}, {{0, 1}, 8}}},
      });
  return table;
}

const PiecewiseRational& kernel_covariance_and() {
  static const PiecewiseRational table(
      covariance_breaks(),
      {
          RationalPiece{-1, 58320,
                        {{{-1, 1}, 2}, {{-81920, -184944, 226776, 1234372, 1232530, 249126, -1150162, -2274458, -6677105, -982009, 10640999, 1336147, -4503501, -27145, -412117, 121371, 140328, 44456, 8748, 972}, 1}},
                        {{{2, 1}, 2}, {{1, 1}, 3}, {{0, 1}, 6}, {{1, 0, 2}, 1}}},
          RationalPiece{-1, 116640,
                        {{{49152, 219936, -55952, -680120, -1616444, 586636, 3262952, 4185440, -13013598, 7159710, 13293088, -27667544, 11140788, 13434672, -13836295, 3251855, 443518, -118850, -45155, -269, 3402, 486}, 1}},
                        {{{2, 1}, 2}, {{1, 1}, 3}, {{0, 1}, 6}, {{1, 0, 2}, 1}}},
          RationalPiece{-1, 116640,
                        {{{49152, 219936, -3041936, 2305864, 2364868, -4168820, 11101160, -2832544, -30889822, 27137438, 24604048, -43009544, 8770788, 18084672, -13736295, 2751855, 443518, -118850, -45155, -269, 3402, 486}, 1}},
                        {{{2, 1}, 2}, {{1, 1}, 3}, {{0, 1}, 6}, {{1, 0, 2}, 1}}},
          RationalPiece{-1, 58320,
                        {{{-98304, -489024, 1931776, 4646688, -2004944, -9167580, -5806580, -11284026, 39974410, 32551926, -81700012, -2280753, 62283823, -26295324, -10894618, 12849927, -4791125, -297666, 1353430, -441888, -60328, 25632, 3632}, 1}},
                        {{{1, 1}, 3}, {{2, 1}, 3}, {{0, 1}, 6}, {{-2, 0, 1}, 1}, {{1, 0, 2}, 1}}},
          RationalPiece{-1, 58320,
                        {{{65536, 23328, 340736, -5513952, 4719720, 61038, -4936170, 27901506, -30178496, -8239197, 39261953, -41623065, 11797395, 23837088, -23566328, 5424126, 1200518, -1167012, 958940, -364992, -49432, 25632, 3632}, 1}},
                        {{{1, 1}, 3}, {{2, 1}, 3}, {{0, 1}, 6}, {{1, 0, 1}, 1}, {{1, 0, 2}, 1}}},
          RationalPiece{1, 466560,
                        {{{993024, -2545664, 15628032, -21111616, 17591952, 12246288, -97568688, 158439568, -69106464, -178092280, 262451196, -65530400, -76052574, 81624200, -69243129, 27825711, 10220280, -9774118, 2105697, -103099, -11142, 1562}, 1}},
                        {{{1, 1}, 3}, {{2, 1}, 3}, {{0, 1}, 5}, {{1, 0, 1}, 1}, {{1, 0, 2}, 1}}},
          RationalPiece{1, 466560,
                        {{{993024, -2545664, 15628032, -21111616, 17591952, 12246288, -97568688, 158439568, -69106464, -178092280, 262451196, -65530400, -76052574, 81624200, -69243129, 27825711, 10220280, -9774118, 2105697, -103099, -11142, 1562}, 1}},
                        {{{1, 1}, 3}, {{2, 1}, 3}, {{0, 1}, 5}, {{1, 0, 1}, 1}, {{1, 0, 2}, 1}}},
          RationalPiece{-1, 1920,
                        {{{61440, -116736, 635904, -3576320, 6666240, -4579328, -3864576, 17326976, -28084416, 13109584, 20482512, -32987760, 22789584, -2665248, -18946136, 18512684, -1589216, -5313494, 2066216, 245667, -268053, 29528, 8770, -2395, 281, -30, 2}, 1}},
                        {{{1, 1}, 3}, {{2, 1}, 3}, {{0, 1}, 10}, {{1, 0, 1}, 1}, {{1, 0, 2}, 1}}},
          RationalPiece{-1, 1920,
                        {{{63488, -107520, 640512, -3603200, 6638848, -4575488, -3862784, 17416832, -27988416, 12930896, 20384720, -32858736, 22736336, -2598688, -18837080, 18337836, -1608928, -5219030, 2052136, 225443, -262677, 31064, 8258, -2395, 281, -30, 2}, 1}},
                        {{{1, 1}, 3}, {{2, 1}, 3}, {{0, 1}, 10}, {{1, 0, 1}, 1}, {{1, 0, 2}, 1}}},
          RationalPiece{-1, 1920,
                        {{{63488, -171008, 430592, -3388672, 7327232, 7781120, -42614272, 27142272, 66358080, -98636848, -15515040, 106256352, -44860384, -40677696, 36944680, -437020, -8676180, 2446870, 524994, -328867, 21934, 11572, -2612, 307, -32, 2}, 1}},
                        {{{-1, 1}, 1}, {{1, 1}, 3}, {{2, 1}, 3}, {{0, 1}, 10}, {{-1, 0, 2}, 1}}},
          RationalPiece{1, 15,
                        {{{-2, 6, 44, -292, 295, 909, -1370, -858, 1568, 320, -621, -127, 90, 30}, 1}},
                        {{{1, 1}, 3}, {{0, 1}, 10}, {{-1, 0, 2}, 1}}},
      });
  return table;
}

const PiecewiseRational& kernel_covariance_or() {
  static const PiecewiseRational table(
      covariance_breaks(),
      {
          RationalPiece{-1, 58320,
                        {{{30824, -132876, 1645826, -5608569, 7085471, -2234754, -10290256, 32338215, -36606859, -1754523, 49876417, -60944766, 15883834, 37427862, -33432692, 2978697, 5576151, -1823223, -19193, -84225, 50731, 13122, 1458}, 1}},
                        {{{1, 1}, 3}, {{2, 1}, 3}, {{0, 1}, 6}, {{1, 0, 1}, 1}, {{1, 0, 2}, 1}}},
          RationalPiece{-1, 116640,
                        {{{28880, -413208, 3070468, -11254002, 14541630, -3667716, -19812000, 64360782, -74801558, -4883958, 99831906, -120628524, 33155180, 75243552, -67685050, 5055135, 11053023, -3300900, 156014, -175011, 62825, 13122, 1458}, 1}},
                        {{{1, 1}, 3}, {{2, 1}, 3}, {{0, 1}, 6}, {{1, 0, 1}, 1}, {{1, 0, 2}, 1}}},
          RationalPiece{-1, 116640,
                        {{{28880, -413208, 3070468, -11254002, 14541630, -3667716, -19812000, 64360782, -74801558, -4883958, 99831906, -120628524, 33155180, 75243552, -67685050, 5055135, 11053023, -3300900, 156014, -175011, 62825, 13122, 1458}, 1}},
                        {{{1, 1}, 3}, {{2, 1}, 3}, {{0, 1}, 6}, {{1, 0, 1}, 1}, {{1, 0, 2}, 1}}},
          RationalPiece{-1, 58320,
                        {{{-28880, 413208, -7037340, 17019366, -13006396, -5940597, 43754559, -88962768, 56621894, 64653597, -152209261, 123606417, 27378901, -156173934, 85975304, 43450125, -47189711, 2883672, 5942884, -986280, -36820, -149106, 29590, 8748, 972}, 1}},
                        {{{1, 1}, 3}, {{2, 1}, 3}, {{0, 1}, 6}, {{-2, 0, 1}, 1}, {{1, 0, 1}, 1}, {{1, 0, 2}, 1}}},
          RationalPiece{-1, 58320,
                        {{{-1944, 14580, 2292994, -5055609, 3136927, -115074, -9107024, 26778663, -22237963, -7381467, 31497249, -43126062, 19600850, 26163354, -29416804, 4573731, 3745643, -1552026, 261546, -131610, 31534, 8748, 972}, 1}},
                        {{{1, 1}, 3}, {{2, 1}, 3}, {{0, 1}, 6}, {{1, 0, 1}, 1}, {{1, 0, 2}, 1}}},
          RationalPiece{1, 233280,
                        {{{7776, -58320, 134136, 1593828, -8656508, 14179848, -12851392, -26383068, 88057996, -57216612, -46658244, 125034492, -98093906, -29292735, 80028903, -33347697, 1844321, 3921057, -2691213, 1024401, -181459, -7290, 486}, 1}},
                        {{{1, 1}, 3}, {{2, 1}, 3}, {{0, 1}, 6}, {{1, 0, 1}, 1}, {{1, 0, 2}, 1}}},
          RationalPiece{1, 233280,
                        {{{-31104, 544320, -4315680, 17736336, -40690240, 48283912, 4053376, -77449360, 75311048, -39129236, -19357704, 80410332, 18577230, -122708655, 18516450, 91134324, -63559490, 7460036, 8763566, -4656806, 1205860, -174169, -7776, 486}, 1}},
                        {{{-1, 1}, 1}, {{1, 1}, 3}, {{2, 1}, 3}, {{0, 1}, 6}, {{1, 0, 1}, 1}, {{1, 0, 2}, 1}}},
          RationalPiece{1, 960,
                        {{{-245760, 1701888, -2687872, 523712, 1137696, -7797264, 10691376, 526744, -6773160, 9535720, -8695792, -1468692, 6565124, -3723120, 517846, 697707, -450859, 78713, 8367, -10685, 4137, 107, -161, -30, 2}, 1}},
                        {{{1, 1}, 3}, {{2, 1}, 3}, {{0, 1}, 8}, {{1, 0, 1}, 1}, {{1, 0, 2}, 1}}},
          RationalPiece{1, 960,
                        {{{-1024, -3584, -244480, 1959808, -4633984, 5155776, -4018976, -3823216, 14466592, -13850504, 7126240, 2344968, -11014136, 9512164, -3001568, -634128, 1161830, -511355, 67536, 21289, -15610, 4157, 236, -129, -32, 2}, 1}},
                        {{{1, 1}, 2}, {{2, 1}, 3}, {{0, 1}, 10}, {{1, 0, 1}, 1}, {{1, 0, 2}, 1}}},
          RationalPiece{1, 960,
                        {{{-1024, -2560, -235776, 2217088, -5402752, -1262208, 20667776, -19910592, -14886656, 33980568, -12243496, -11274744, 12748688, -5130844, 89468, 1196092, -717366, 166787, 23049, -26982, 5400, 433, -101, -34, 2}, 1}},
                        {{{-1, 1}, 1}, {{1, 1}, 2}, {{2, 1}, 3}, {{0, 1}, 10}, {{-1, 0, 2}, 1}}},
          RationalPiece{2, 15,
                        {{{1, -4, 39, -190, 214, 396, -648, -48, 180}, 1}},
                        {{{1, 1}, 2}, {{0, 1}, 10}, {{-1, 0, 2}, 1}}},
      });
  return table;
}

}  // namespace tables

namespace {

double evaluate_at(const PiecewiseRational& f, const ExpansionParameter& r, double at_infinity) {
  if (r.is_infinite()) return at_infinity;
  return f(r.value());
}

void require_edge_kind(EdgeKind kind) {
  if (kind == EdgeKind::Simple)
    throw Error(ErrorKind::InvalidArgument, "closed forms exist for AND and OR edges only");
}

}  // namespace

double mean_and(const ExpansionParameter& r) { return evaluate_at(tables::edge_probability_and(), r, 1.0); }
double mean_or(const ExpansionParameter& r) { return evaluate_at(tables::edge_probability_or(), r, 1.0); }
double var_kernel_and(const ExpansionParameter& r) { return evaluate_at(tables::kernel_variance_and(), r, 0.0); }
double var_kernel_or(const ExpansionParameter& r) { return evaluate_at(tables::kernel_variance_or(), r, 0.0); }
double cov_kernel_and(const ExpansionParameter& r) { return evaluate_at(tables::kernel_covariance_and(), r, 0.0); }
double cov_kernel_or(const ExpansionParameter& r) { return evaluate_at(tables::kernel_covariance_or(), r, 0.0); }

double edge_probability(EdgeKind kind, const ExpansionParameter& r) {
  require_edge_kind(kind);
  return kind == EdgeKind::And ? mean_and(r) : mean_or(r);
}

double kernel_variance(EdgeKind kind, const ExpansionParameter& r) {
  require_edge_kind(kind);
  return kind == EdgeKind::And ? var_kernel_and(r) : var_kernel_or(r);
}

double kernel_covariance(EdgeKind kind, const ExpansionParameter& r) {
  require_edge_kind(kind);
  return kind == EdgeKind::And ? cov_kernel_and(r) : cov_kernel_or(r);
}

double finite_sample_variance(std::size_t n, const ExpansionParameter& r, EdgeKind kind) {
  if (n < 2) throw Error(ErrorKind::TooFewVertices, "finite-sample variance needs n >= 2");
  const double nn = static_cast<double>(n);
  const double pairs = nn * (nn - 1.0);
  return 2.0 / pairs * kernel_variance(kind, r) + 4.0 * (nn - 2.0) / pairs * kernel_covariance(kind, r);
}

AsymptoticParams normal_params(std::size_t n, const ExpansionParameter& r, EdgeKind kind) {
  require_edge_kind(kind);
  if (n < 1) throw Error(ErrorKind::TooFewVertices, "normal approximation needs n >= 1");
  if (r.is_infinite() || (kind == EdgeKind::And && r.value() == 1.0))
    throw Error(ErrorKind::DegenerateLimit,
                std::string("no normal limit for ") + to_string(kind) + " density at r = " + r.str());
  return {kind, r, n, edge_probability(kind, r), 4.0 * kernel_covariance(kind, r)};
}

namespace {

struct WeightSums {
  double s2 = 0.0;
  double s3 = 0.0;
};

WeightSums weight_sums(std::span<const double> weights) {
  if (weights.empty()) throw Error(ErrorKind::InvalidArgument, "weights are empty");
  WeightSums s;
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw Error(ErrorKind::InvalidArgument, "weights must be finite and >= 0");
    total += w;
    s.s2 += w * w;
    s.s3 += w * w * w;
  }
  if (std::abs(total - 1.0) > 1e-9) throw Error(ErrorKind::InvalidArgument, "weights must sum to 1");
  return s;
}

MultiTriangleParams base_params(std::span<const double> weights, const ExpansionParameter& r, EdgeKind kind) {
  require_edge_kind(kind);
  const WeightSums s = weight_sums(weights);
  MultiTriangleParams out{kind, r, {weights.begin(), weights.end()}, s.s2, s.s3, 0.0, 0.0, 0.0, 0.0};
  out.p = edge_probability(kind, r);
  out.nu = kernel_covariance(kind, r);
  return out;
}

}  // namespace

MultiTriangleParams multi_triangle_params_I(std::span<const double> weights, const ExpansionParameter& r,
                                            EdgeKind kind) {
  MultiTriangleParams out = base_params(weights, r, kind);
  out.mean = out.p * out.sum_w2;
  // sum w^3 - (sum w^2)^2 >= 0 mathematically; clamp rounding noise for w = [1]
  const double spread = std::max(0.0, out.sum_w3 - out.sum_w2 * out.sum_w2);
  out.cov = out.nu * out.sum_w3 + out.p * out.p * spread;
  return out;
}

MultiTriangleParams multi_triangle_params_II(std::span<const double> weights, const ExpansionParameter& r,
                                             EdgeKind kind) {
  MultiTriangleParams out = base_params(weights, r, kind);
  out.mean = out.p;
  out.cov = out.nu * out.sum_w3 / (out.sum_w2 * out.sum_w2);
  return out;
}

}  // namespace pepcd
