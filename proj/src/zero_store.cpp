#include "zeta_eta/zero_store.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "zeta_eta/branch_logzeta.hpp"
#include "zeta_eta/quadrature.hpp"
#include "zeta_eta/zeta.hpp"

namespace zeta_eta {
namespace {

bool by_gamma(const ZeroRecord& a, const ZeroRecord& b) { return a.gamma < b.gamma; }

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(std::string_view text, long line_no) {
  text = trim(text);
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw Error(Errc::ParseError, "cannot parse '" + std::string(text) + "'", line_no);
  return value;
}

}  // namespace

ZeroStore::ZeroStore() : records_(std::make_shared<const std::vector<ZeroRecord>>()) {}

ZeroStore::ZeroStore(std::vector<ZeroRecord> records, double t_max, std::string source)
    : t_max_(t_max), source_(std::move(source)) {
  for (const auto& r : records) {
    if (!(r.gamma > 0.0) || !std::isfinite(r.gamma))
      throw Error(Errc::InvalidArgument, "zero ordinates must be positive and finite");
    if (!(r.beta > 0.0 && r.beta < 1.0)) throw Error(Errc::OutOfStrip, "beta must lie in (0, 1)");
    if (r.multiplicity < 1) throw Error(Errc::InvalidArgument, "multiplicity must be >= 1");
    if (!r.hypothetical && r.beta != 0.5)
      throw Error(Errc::InvalidArgument, "tabulated zeros must have beta = 1/2");
  }
  std::stable_sort(records.begin(), records.end(), by_gamma);
  records_ = std::make_shared<const std::vector<ZeroRecord>>(std::move(records));
}

std::span<const ZeroRecord> ZeroStore::in_range(double lo, double hi) const {
  const auto& v = *records_;
  auto first = std::lower_bound(v.begin(), v.end(), lo, [](const ZeroRecord& r, double x) { return r.gamma < x; });
  auto last = std::upper_bound(first, v.end(), hi, [](double x, const ZeroRecord& r) { return x < r.gamma; });
  return {first, last};
}

long ZeroStore::count_below(double T, bool include_hypothetical) const {
  long n = 0;
  for (const auto& r : in_range(0.0, T)) {
    if (r.gamma >= T || (r.hypothetical && !include_hypothetical)) continue;
    n += r.multiplicity;
  }
  return n;
}

std::optional<ZeroRecord> ZeroStore::ordinate_near(double t, double tol) const {
  for (const auto& r : in_range(std::abs(t) - tol, std::abs(t) + tol))
    if (!r.hypothetical) return r;
  return std::nullopt;
}

std::optional<double> ZeroStore::nearest_ordinate(double t) const {
  const auto& v = *records_;
  auto it = std::lower_bound(v.begin(), v.end(), t, [](const ZeroRecord& r, double x) { return r.gamma < x; });
  std::optional<double> best;
  for (auto cand : {it, it == v.begin() ? v.end() : std::prev(it)}) {
    if (cand == v.end()) continue;
    if (!best || std::abs(cand->gamma - t) < std::abs(*best - t)) best = cand->gamma;
  }
  return best;
}

bool ZeroStore::has_hypothetical() const {
  return std::any_of(records_->begin(), records_->end(), [](const ZeroRecord& r) { return r.hypothetical; });
}

ZeroStore parse_zeros(std::istream& in, ZeroFormat format, const std::string& source) {
  std::vector<ZeroRecord> records;
  std::string raw;
  long line_no = 0;
  bool header_seen = false;
  double last = -1.0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    ZeroRecord rec;
    if (format == ZeroFormat::Plain) {
      rec.gamma = parse_number<double>(line, line_no);
    } else {
      std::vector<std::string_view> fields;
      std::size_t pos = 0;
      while (true) {
        const auto comma = line.find(',', pos);
        fields.push_back(line.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
      }
      if (!header_seen) {
        header_seen = true;
        if (trim(fields[0]) == "gamma") continue;
      }
      if (fields.size() > 3) throw Error(Errc::ParseError, "expected gamma[,beta[,multiplicity]]", line_no);
      rec.gamma = parse_number<double>(fields[0], line_no);
      if (fields.size() > 1) rec.beta = parse_number<double>(fields[1], line_no);
      if (fields.size() > 2) rec.multiplicity = parse_number<int>(fields[2], line_no);
      if (!(rec.beta > 0.0 && rec.beta < 1.0)) throw Error(Errc::OutOfStrip, "beta outside (0, 1)", line_no);
      if (rec.multiplicity < 1) throw Error(Errc::ParseError, "multiplicity must be >= 1", line_no);
      rec.hypothetical = rec.beta != 0.5;
    }
    if (!(rec.gamma > 0.0) || !std::isfinite(rec.gamma))
      throw Error(Errc::ParseError, "ordinate must be positive", line_no);
    if (!(rec.gamma > last)) throw Error(Errc::NotSorted, "ordinates must be strictly increasing", line_no);
    last = rec.gamma;
    records.push_back(rec);
  }
  if (records.empty()) throw Error(Errc::EmptyFile, "no zeros in " + source);
  const double t_max = records.back().gamma;
  return ZeroStore(std::move(records), t_max, source);
}

ZeroStore load_zeros(const std::filesystem::path& path, ZeroFormat format) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  return parse_zeros(in, format, path.string());
}

long count_window(const ZeroStore& store, double t, double h) {
  if (!(h > 0.0)) throw Error(Errc::InvalidArgument, "window half-width must be positive");
  if (t + h > store.t_max()) throw Error(Errc::BeyondTable, "window reaches above t_max");
  long n = 0;
  for (const auto& r : store.in_range(t - h, t + h)) n += r.multiplicity;
  for (const auto& r : store.in_range(-t - h, -t + h)) n += r.multiplicity;  // mirrored zeros at -gamma
  return n;
}

double sigma_Xt(const ZeroStore& store, double X, double t) {
  if (!(X >= 3.0)) throw Error(Errc::InvalidArgument, "sigma_Xt needs X >= 3");
  const double log_x = std::log(X);
  if (t + 1.0 / log_x > store.t_max()) throw Error(Errc::BeyondTable, "window reaches above t_max");
  double best = 2.0 / log_x;
  for (const auto& r : store.records()) {
    if (r.beta - 0.5 <= best) continue;
    const double window = std::pow(X, 3.0 * (r.beta - 0.5)) / log_x;
    if (std::abs(t - r.gamma) <= window) best = r.beta - 0.5;
  }
  return 0.5 + 2.0 * best;
}

ZeroStore inject_hypothetical(const ZeroStore& store, double beta, double gamma, int multiplicity) {
  if (!(beta > 0.0 && beta < 1.0)) throw Error(Errc::OutOfStrip, "hypothetical zero must satisfy 0 < beta < 1");
  if (!(gamma > 0.0)) throw Error(Errc::InvalidArgument, "hypothetical zero needs gamma > 0");
  if (multiplicity < 1) throw Error(Errc::InvalidArgument, "multiplicity must be >= 1");
  std::vector<ZeroRecord> records(store.records().begin(), store.records().end());
  records.push_back({gamma, beta, multiplicity, true});
  return ZeroStore(std::move(records), store.t_max(), store.source() + "+hypothetical");
}

RvmfCheck rvmf_check(const ZeroStore& store, double T, const EvalPrecision& prec) {
  if (!(T > 0.0)) throw Error(Errc::InvalidArgument, "rvmf_check needs T > 0");
  if (T > store.t_max()) throw Error(Errc::BeyondTable, "T above t_max");
  if (auto near = store.nearest_ordinate(T); near && std::abs(*near - T) < 1e-6)
    throw Error(Errc::OnOrdinate, "T coincides with a zero ordinate");
  RvmfCheck out;
  out.n_store = store.count_below(T);
  out.n_rvmf = riemann_siegel_theta(T) / kPi + 1.0 + big_s(T, store, prec);
  out.delta = out.n_rvmf - static_cast<double>(out.n_store);
  return out;
}

double zero_density(double gamma) {
  const double g = std::abs(gamma);
  return g > 2.0 * kPi ? std::log(g / (2.0 * kPi)) / (2.0 * kPi) : 0.0;
}

double lorentz_zero_sum(const ZeroStore& store, double t) {
  double sum = 0.0;
  for (const auto& r : store.records()) {
    if (r.gamma > store.t_max()) continue;
    const double a = t - r.gamma;
    const double b = t + r.gamma;
    sum += r.multiplicity * (1.0 / (1.0 + a * a) + 1.0 / (1.0 + b * b));
  }
  // gamma = t_max / u, u in (0, 1]
  const double tm = store.t_max();
  auto tail = [&](double u) {
    if (u <= 0.0) return 0.0;
    const double g = tm / u;
    const double a = t - g;
    const double b = t + g;
    return zero_density(g) * (1.0 / (1.0 + a * a) + 1.0 / (1.0 + b * b)) * tm / (u * u);
  };
  sum += quad::integrate(tail, 0.0, 1.0, 1e-10, 1e-10).value;
  return sum;
}

}  // namespace zeta_eta
