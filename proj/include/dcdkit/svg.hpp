#pragma once

#include <string>
#include <vector>

namespace dcdkit {

struct BoundingBox {
    double min_x = 0, min_y = 0, max_x = 1, max_y = 1;

    void include(double x, double y);
    bool empty() const { return !initialized; }
    bool initialized = false;
};

// Square drawing with a world-to-pixel map that keeps the aspect ratio and
// flips y so that world "up" is up on screen. Coordinates are printed with
// fixed precision so output is byte-stable.
class SvgCanvas {
public:
    SvgCanvas(const BoundingBox& world, int size_px, double margin_fraction = 0.06);

    void segment(double x1, double y1, double x2, double y2, const std::string& stroke, double width_px = 1.0);
    void circle(double cx, double cy, double r, const std::string& stroke, double width_px = 1.0);
    void dot(double x, double y, double radius_px, const std::string& fill);
    void label(double x, double y, const std::string& text, double font_px = 9.0);

    std::string str() const;

private:
    double px(double x) const;
    double py(double y) const;

    int size_;
    double scale_ = 1, offset_x_ = 0, offset_y_ = 0;
    std::vector<std::string> body_;
};

/// Fixed qualitative palette, cycled.
std::string palette_color(int i);
std::string xml_escape(const std::string& s);

}  // namespace dcdkit
