#include "hookprod/svg.hpp"

#include <algorithm>
#include <set>

#include "hookprod/errors.hpp"

namespace hookprod {

namespace {

struct Canvas {
	GridPoint box;
	value_t scale;
	value_t margin = 48;

	value_t width() const { return margin * 2 + scale * (box.x + 1); }
	value_t height() const { return margin * 2 + scale * (box.y + 1); }
	// grid coordinates to pixel coordinates, y flipped
	value_t px(value_t x) const { return margin + scale * x; }
	value_t py(value_t y) const { return margin + scale * (box.y + 1 - y); }
};

const char* const layer_fill[] = {"#3f6fb5", "#c8553d"};
const char* const layer_opacity[] = {"0.50", "0.45"};

std::string polygon(const Canvas& canvas, const std::vector<GridPoint>& corners,
                    std::size_t layer) {
	std::string points;
	for (const GridPoint& c : corners) {
		if (!points.empty()) points += ' ';
		points += std::to_string(canvas.px(c.x)) + ',' + std::to_string(canvas.py(c.y));
	}
	return "  <polygon points=\"" + points + "\" fill=\"" + layer_fill[layer] +
	       "\" fill-opacity=\"" + layer_opacity[layer] + "\" stroke=\"" + layer_fill[layer] +
	       "\" stroke-width=\"1\"/>\n";
}

// Support region of one hook clipped to [0, box+1)^2, as polygon corners in
// grid coordinates.
std::vector<GridPoint> support_corners(const HookModule& hook, GridPoint box) {
	const value_t ex = box.x + 1, ey = box.y + 1;  // exclusive clip bounds
	if (hook.p.x >= ex || hook.p.y >= ey) return {};
	const value_t qx = is_finite(hook.q.x) ? std::min(hook.q.x, ex) : ex;
	const value_t qy = is_finite(hook.q.y) ? std::min(hook.q.y, ey) : ey;
	if (qx >= ex || qy >= ey || hook.has_mixed_infinity())
		// a leg leaves the window (or never ends): full quadrant in view
		return {{hook.p.x, hook.p.y}, {ex, hook.p.y}, {ex, ey}, {hook.p.x, ey}};
	if (qx == hook.p.x)  // vertical reach only
		return {{hook.p.x, hook.p.y}, {ex, hook.p.y}, {ex, qy}, {hook.p.x, qy}};
	if (qy == hook.p.y)  // horizontal reach only
		return {{hook.p.x, hook.p.y}, {qx, hook.p.y}, {qx, ey}, {hook.p.x, ey}};
	return {{hook.p.x, hook.p.y}, {ex, hook.p.y}, {ex, qy},
	        {qx, qy},             {qx, ey},       {hook.p.x, ey}};
}

}  // namespace

std::string render_supports_svg(const std::vector<HookDecomposition>& layers, GridPoint box) {
	if (box.x < 1 || box.y < 1) throw Error("box coordinates must be >= 1");
	if (layers.size() > 2) throw Error("at most two overlay layers are supported");

	Canvas canvas;
	canvas.box = box;
	canvas.scale = std::max<value_t>(1, 720 / (std::max(box.x, box.y) + 1));

	std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
	                  std::to_string(canvas.width()) + "\" height=\"" +
	                  std::to_string(canvas.height()) + "\" viewBox=\"0 0 " +
	                  std::to_string(canvas.width()) + ' ' + std::to_string(canvas.height()) +
	                  "\">\n";
	svg += "  <rect x=\"0\" y=\"0\" width=\"" + std::to_string(canvas.width()) +
	       "\" height=\"" + std::to_string(canvas.height()) + "\" fill=\"white\"/>\n";

	// tick labels at the corner coordinates of all layers
	std::set<value_t> x_ticks = {0, box.x}, y_ticks = {0, box.y};
	for (const HookDecomposition& layer : layers)
		for (const HookModule& h : layer.hooks) {
			x_ticks.insert(h.p.x);
			y_ticks.insert(h.p.y);
			if (is_finite(h.q.x) && h.q.x <= box.x) x_ticks.insert(h.q.x);
			if (is_finite(h.q.y) && h.q.y <= box.y) y_ticks.insert(h.q.y);
		}

	for (std::size_t layer = 0; layer < layers.size(); ++layer)
		for (const HookModule& hook : layers[layer].sorted_hooks()) {
			hook.validate();
			const std::vector<GridPoint> corners = support_corners(hook, box);
			if (!corners.empty()) svg += polygon(canvas, corners, layer);
		}

	// frame and diagonal guide on top of the filled regions
	svg += "  <rect x=\"" + std::to_string(canvas.px(0)) + "\" y=\"" +
	       std::to_string(canvas.py(box.y + 1)) + "\" width=\"" +
	       std::to_string(canvas.scale * (box.x + 1)) + "\" height=\"" +
	       std::to_string(canvas.scale * (box.y + 1)) +
	       "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
	svg += "  <line x1=\"" + std::to_string(canvas.px(0)) + "\" y1=\"" +
	       std::to_string(canvas.py(0)) + "\" x2=\"" +
	       std::to_string(canvas.px(std::min(box.x, box.y) + 1)) + "\" y2=\"" +
	       std::to_string(canvas.py(std::min(box.x, box.y) + 1)) +
	       "\" stroke=\"#bbbbbb\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";

	for (value_t x : x_ticks)
		svg += "  <text x=\"" + std::to_string(canvas.px(x)) + "\" y=\"" +
		       std::to_string(canvas.py(0) + 16) +
		       "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">" +
		       std::to_string(x) + "</text>\n";
	for (value_t y : y_ticks)
		svg += "  <text x=\"" + std::to_string(canvas.px(0) - 6) + "\" y=\"" +
		       std::to_string(canvas.py(y) + 4) +
		       "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\">" +
		       std::to_string(y) + "</text>\n";

	svg += "</svg>\n";
	return svg;
}

}  // namespace hookprod
