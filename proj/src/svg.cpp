#include "dcdkit/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

namespace dcdkit {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    if (s == "-0.000") s = "0.000";
    return s;
}

}  // namespace

void BoundingBox::include(double x, double y) {
    if (!initialized) {
        min_x = max_x = x;
        min_y = max_y = y;
        initialized = true;
        return;
    }
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
}

SvgCanvas::SvgCanvas(const BoundingBox& world, int size_px, double margin_fraction) : size_(size_px) {
    double w = world.max_x - world.min_x;
    double h = world.max_y - world.min_y;
    const double extent = std::max({w, h, 1e-12});
    const double usable = size_px * (1.0 - 2.0 * margin_fraction);
    scale_ = usable / extent;
    offset_x_ = size_px * margin_fraction + (usable - w * scale_) / 2.0 - world.min_x * scale_;
    offset_y_ = size_px * margin_fraction + (usable - h * scale_) / 2.0 + world.max_y * scale_;
}

double SvgCanvas::px(double x) const { return offset_x_ + x * scale_; }
double SvgCanvas::py(double y) const { return offset_y_ - y * scale_; }

void SvgCanvas::segment(double x1, double y1, double x2, double y2, const std::string& stroke, double width_px) {
    body_.push_back("<line x1=\"" + fmt(px(x1)) + "\" y1=\"" + fmt(py(y1)) + "\" x2=\"" + fmt(px(x2)) + "\" y2=\"" +
                    fmt(py(y2)) + "\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(width_px) + "\"/>");
}

void SvgCanvas::circle(double cx, double cy, double r, const std::string& stroke, double width_px) {
    body_.push_back("<circle cx=\"" + fmt(px(cx)) + "\" cy=\"" + fmt(py(cy)) + "\" r=\"" + fmt(r * scale_) +
                    "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(width_px) + "\"/>");
}

void SvgCanvas::dot(double x, double y, double radius_px, const std::string& fill) {
    body_.push_back("<circle cx=\"" + fmt(px(x)) + "\" cy=\"" + fmt(py(y)) + "\" r=\"" + fmt(radius_px) + "\" fill=\"" +
                    fill + "\"/>");
}

void SvgCanvas::label(double x, double y, const std::string& text, double font_px) {
    body_.push_back("<text x=\"" + fmt(px(x) + 3) + "\" y=\"" + fmt(py(y) - 3) + "\" font-size=\"" + fmt(font_px) +
                    "\" font-family=\"sans-serif\">" + xml_escape(text) + "</text>");
}

std::string SvgCanvas::str() const {
    const std::string s = std::to_string(size_);
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + s + "\" height=\"" + s + "\" viewBox=\"0 0 " + s +
                      " " + s + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& e : body_) out += e + "\n";
    out += "</svg>\n";
    return out;
}

std::string palette_color(int i) {
    static const std::array<const char*, 10> colors = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                                       "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};
    const int n = static_cast<int>(colors.size());
    return colors[((i % n) + n) % n];
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace dcdkit
