#include <sstream>
#include <string>
#include <vector>

#include "padicdx/charcycle.hpp"

namespace padicdx {
namespace {

std::string title(const CharCycle& cc) {
  if (cc.is_zero()) return "Char(D/P): 0";
  return "Char(D/P): m0=" + std::to_string(cc.m0) +
         ", length=" + std::to_string(cc.length());
}

void put(std::string& row, long col, const std::string& text) {
  if (col < 0) col = 0;
  const auto c = static_cast<std::size_t>(col);
  if (row.size() < c + text.size()) row.resize(c + text.size(), ' ');
  row.replace(c, text.size(), text);
}

std::string rtrim(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

std::string render_ascii(const CharCycle& cc) {
  const long s = static_cast<long>(cc.vertical.size());
  const long width = std::max(48L, 16 * (s + 1));
  std::vector<long> cols;
  for (long i = 0; i < s; ++i) cols.push_back((i + 1) * width / (s + 1));

  auto blank = [&] { return std::string(static_cast<std::size_t>(width), ' '); };
  std::vector<std::string> rows;
  rows.push_back(title(cc));

  // Three rows of vertical lines above the zero section, the middle one
  // annotated with the multiplicity.
  for (int r = 0; r < 3; ++r) {
    std::string row = blank();
    for (long i = 0; i < s; ++i) {
      put(row, cols[i], "|");
      if (r == 1) put(row, cols[i] + 3, "m=" + std::to_string(cc.vertical[i].second));
    }
    rows.push_back(row);
  }

  std::string zero = blank();
  if (cc.m0 > 0) {
    zero = std::string(static_cast<std::size_t>(width), '=');
    for (long c : cols) put(zero, c, "+");
    put(zero, width + 2, "[X] m0=" + std::to_string(cc.m0));
  } else {
    for (long c : cols) put(zero, c, "|");
  }
  rows.push_back(zero);

  for (int r = 0; r < 2; ++r) {
    std::string row = blank();
    for (long c : cols) put(row, c, "|");
    rows.push_back(row);
  }

  std::string fiber(static_cast<std::size_t>(width), '-');
  for (long c : cols) put(fiber, c, "+");
  put(fiber, width + 2, "X_s");
  rows.push_back(fiber);

  std::string labels = blank();
  for (long i = 0; i < s; ++i) {
    const std::string label = cc.vertical[i].first.label();
    put(labels, cols[i] - static_cast<long>(label.size() - 1) / 2, label);
  }
  rows.push_back(labels);

  std::string out;
  for (const auto& row : rows) out += rtrim(row) + "\n";
  return out;
}

std::string render_svg(const CharCycle& cc) {
  const long s = static_cast<long>(cc.vertical.size());
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"360\" "
        "viewBox=\"0 0 640 360\">\n";
  os << "  <rect width=\"640\" height=\"360\" fill=\"white\"/>\n";
  os << "  <text x=\"20\" y=\"28\" font-family=\"monospace\" font-size=\"16\">"
     << title(cc) << "</text>\n";
  os << "  <line x1=\"40\" y1=\"300\" x2=\"580\" y2=\"300\" stroke=\"black\" "
        "stroke-width=\"1\"/>\n";
  os << "  <text x=\"588\" y=\"305\" font-family=\"monospace\" "
        "font-size=\"14\">X_s</text>\n";
  if (cc.m0 > 0) {
    os << "  <line x1=\"40\" y1=\"180\" x2=\"580\" y2=\"180\" "
          "stroke=\"steelblue\" stroke-width=\"3\"/>\n";
    os << "  <text x=\"588\" y=\"185\" font-family=\"monospace\" "
          "font-size=\"14\">m0=" << cc.m0 << "</text>\n";
  }
  for (long i = 0; i < s; ++i) {
    const long x = 40 + (i + 1) * 540 / (s + 1);
    const auto& [pt, mult] = cc.vertical[i];
    os << "  <line x1=\"" << x << "\" y1=\"50\" x2=\"" << x
       << "\" y2=\"300\" stroke=\"firebrick\" stroke-width=\"2\"/>\n";
    os << "  <text x=\"" << x + 6 << "\" y=\"70\" font-family=\"monospace\" "
          "font-size=\"14\">m=" << mult << "</text>\n";
    os << "  <text x=\"" << x << "\" y=\"322\" text-anchor=\"middle\" "
          "font-family=\"monospace\" font-size=\"14\">" << pt.label()
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_cc(const CharCycle& cc, RenderFormat format) {
  return format == RenderFormat::Svg ? render_svg(cc) : render_ascii(cc);
}

}  // namespace padicdx
