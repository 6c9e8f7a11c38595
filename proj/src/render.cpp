#include "obkirby/render.hpp"

#include <algorithm>
#include <sstream>

namespace ob {

namespace {

std::string esc(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

constexpr int kWidth = 920;
constexpr int kRowHeight = 34;
constexpr int kTop = 110;

std::string svg_open(int height) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << kWidth << " " << height << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << height
     << "\" fill=\"white\"/>\n";
  return os.str();
}

void text(std::ostringstream& os, int x, int y, const std::string& s, int size = 14,
          const char* anchor = "start") {
  os << "<text x=\"" << x << "\" y=\"" << y << "\" font-family=\"monospace\" font-size=\"" << size
     << "\" text-anchor=\"" << anchor << "\" fill=\"black\">" << esc(s) << "</text>\n";
}

void ball(std::ostringstream& os, int cx, int cy, const std::string& label) {
  os << "<circle cx=\"" << cx << "\" cy=\"" << cy
     << "\" r=\"16\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n"
     << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"3\" fill=\"black\"/>\n";
  text(os, cx, cy + 34, label, 12, "middle");
}

}  // namespace

std::string render_svg(const KirbyDiagram& kd) {
  const int rows = kd.component_count();
  const int height = kTop + kRowHeight * std::max(rows, 1) + 70;
  std::ostringstream os;
  os << svg_open(height);
  text(os, 20, 30, "Kirby diagram: " + std::to_string(kd.balls) + " dotted ball(s), " +
                       std::to_string(rows) + " framed component(s), " +
                       std::to_string(kd.three_handles) + " three-handle(s), " +
                       std::to_string(kd.four_handles) + " four-handle(s)",
       16);

  for (int i = 0; i < kd.balls; ++i)
    ball(os, 60 + 70 * i, 70, "x" + std::to_string(i + 1));

  for (int i = 0; i < rows; ++i) {
    const FramedComponent& c = kd.components[static_cast<std::size_t>(i)];
    const int y = kTop + kRowHeight * i + 20;
    os << "<line x1=\"160\" y1=\"" << y - 5 << "\" x2=\"" << kWidth - 220 << "\" y2=\"" << y - 5
       << "\" stroke=\"" << (c.role == ComponentRole::Dual ? "gray" : "black")
       << "\" stroke-width=\"1.5\"/>\n";
    text(os, 20, y, c.name + (c.role == ComponentRole::Dual ? " (dual)" : ""));
    text(os, 170, y - 10, to_string(c.word), 12);
    text(os, kWidth - 200, y, "framing " + std::to_string(c.framing), 12);
  }

  // Linking numbers as text; the matrix is part of the diagram data.
  std::string lk = "linking:";
  for (int r = 0; r < kd.linking.rows; ++r) {
    lk += " [";
    for (int c = 0; c < kd.linking.cols; ++c) {
      if (c) lk += " ";
      lk += std::to_string(kd.linking(r, c));
    }
    lk += "]";
  }
  text(os, 20, height - 25, lk, 12);
  os << "</svg>\n";
  return os.str();
}

std::string render_svg(const HeegaardDiagram& hd) {
  const int rows = hd.curve_count();
  const int height = kTop + kRowHeight * std::max(rows, 1) + 40;
  std::ostringstream os;
  os << svg_open(height);
  text(os, 20, 30, "Heegaard diagram: genus " + std::to_string(hd.genus) + ", " +
                       std::to_string(rows) + " attaching curve(s)",
       16);

  for (int i = 0; i < hd.genus; ++i) {
    // Each 1-handle is a pair of feet on the page boundary.
    const int x = 60 + 110 * i;
    ball(os, x, 70, hd.handle_labels.size() > static_cast<std::size_t>(i)
                        ? hd.handle_labels[static_cast<std::size_t>(i)]
                        : "h" + std::to_string(i + 1));
    ball(os, x + 44, 70, "");
    os << "<path d=\"M " << x << " 54 A 22 22 0 0 1 " << x + 44
       << " 54\" fill=\"none\" stroke=\"black\" stroke-dasharray=\"4 3\"/>\n";
  }

  for (int i = 0; i < rows; ++i) {
    const AttachingCurve& c = hd.curves[static_cast<std::size_t>(i)];
    const int y = kTop + kRowHeight * i + 20;
    std::string desc;
    for (const Event& e : c.events) {
      if (!desc.empty()) desc += " ; ";
      switch (e.kind) {
        case EventKind::Pass:
          desc += "pass " + std::to_string(e.handle) + (e.sign > 0 ? "+" : "-");
          break;
        case EventKind::Kink:
          desc += e.sign > 0 ? "kink+" : "kink-";
          break;
        case EventKind::Cross:
          desc += "cross " + e.other + (e.role == CrossRole::Over ? " over" : " under") +
                  (e.sign > 0 ? "+" : "-");
          break;
      }
    }
    if (desc.empty()) desc = "(eventless)";
    os << "<line x1=\"160\" y1=\"" << y - 5 << "\" x2=\"" << kWidth - 40 << "\" y2=\"" << y - 5
       << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    text(os, 20, y, c.name);
    text(os, 170, y - 10, desc, 12);
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace ob
