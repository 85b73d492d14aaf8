#include "cli.hpp"

#include <array>
#include <map>
#include <sstream>

namespace coxsupport::cli {

namespace {

constexpr double kSize = 480;
constexpr double kMargin = 48;

const char* family_color(const std::string& family) {
  static const std::map<std::string, const char*> colors = {
      {"1", "#1f77b4"}, {"2", "#d62728"}, {"2a", "#2ca02c"}, {"2b", "#9467bd"}, {"2c", "#ff7f0e"}, {"2d", "#8c564b"}};
  auto it = colors.find(family);
  return it == colors.end() ? "#444444" : it->second;
}

}  // namespace

std::string sigma_svg(const CoxeterType& w, const Rational& lo, const Rational& hi,
                      const std::optional<ParamPair>& query) {
  const SigmaPicture pic = sigma_picture(w, lo, hi);
  const double a = lo.get_d();
  const double b = hi.get_d();
  const double inner = kSize - 2 * kMargin;
  auto px = [&](const Rational& c1) { return kMargin + (c1.get_d() - a) / (b - a) * inner; };
  auto py = [&](const Rational& c2) { return kSize - kMargin - (c2.get_d() - a) / (b - a) * inner; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize << "\" height=\"" << kSize
     << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n"
     << "<title>Sigma for " << w.name() << " on [" << format_rational(lo) << ", " << format_rational(hi)
     << "]^2</title>\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << kSize << "\" height=\"" << kSize << "\" fill=\"white\"/>\n"
     << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << inner << "\" height=\"" << inner
     << "\" fill=\"none\" stroke=\"black\"/>\n";

  // Integer grid lines and labels.
  for (BigInt k = floor_of(lo); k <= floor_of(hi); ++k) {
    Rational v(k);
    if (v < lo) continue;
    os << "<line x1=\"" << px(v) << "\" y1=\"" << kMargin << "\" x2=\"" << px(v) << "\" y2=\"" << kSize - kMargin
       << "\" stroke=\"#dddddd\"/>\n"
       << "<line x1=\"" << kMargin << "\" y1=\"" << py(v) << "\" x2=\"" << kSize - kMargin << "\" y2=\"" << py(v)
       << "\" stroke=\"#dddddd\"/>\n"
       << "<text x=\"" << px(v) << "\" y=\"" << kSize - kMargin + 16 << "\" font-size=\"11\" text-anchor=\"middle\">"
       << k.get_str() << "</text>\n"
       << "<text x=\"" << kMargin - 6 << "\" y=\"" << py(v) + 4 << "\" font-size=\"11\" text-anchor=\"end\">"
       << k.get_str() << "</text>\n";
  }
  os << "<text x=\"" << kSize / 2 << "\" y=\"" << kSize - 10 << "\" font-size=\"13\" text-anchor=\"middle\">c1</text>\n"
     << "<text x=\"14\" y=\"" << kSize / 2 << "\" font-size=\"13\" text-anchor=\"middle\">c2</text>\n";

  for (const auto& s : pic.segments) {
    os << "<line x1=\"" << px(s.from.first) << "\" y1=\"" << py(s.from.second) << "\" x2=\"" << px(s.to.first)
       << "\" y2=\"" << py(s.to.second) << "\" stroke=\"" << family_color(s.family)
       << "\" stroke-width=\"1.5\"><title>family " << s.family << "</title></line>\n";
  }
  for (const auto& p : pic.points) {
    os << "<circle cx=\"" << px(p.at.first) << "\" cy=\"" << py(p.at.second) << "\" r=\"3\" fill=\""
       << family_color(p.family) << "\"><title>(" << format_rational(p.at.first) << ", "
       << format_rational(p.at.second) << ") family " << p.family << "</title></circle>\n";
  }
  if (query && query->first >= lo && query->first <= hi && query->second >= lo && query->second <= hi) {
    os << "<circle cx=\"" << px(query->first) << "\" cy=\"" << py(query->second)
       << "\" r=\"7\" fill=\"none\" stroke=\"red\" stroke-width=\"2\"><title>query (" << format_rational(query->first)
       << ", " << format_rational(query->second) << ")</title></circle>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace coxsupport::cli
