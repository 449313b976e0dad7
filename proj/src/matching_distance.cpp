#include <algorithm>
#include <set>

#include "hookprod/distances.hpp"
#include "hookprod/errors.hpp"

namespace hookprod {

namespace {

void validate_line(const LineSample& line) {
	if (line.base.x < 0 || line.base.y < 0)
		throw Error("line base must have natural coordinates");
	if (line.direction.x < 1 || line.direction.y < 1)
		throw Error("line direction must be positive");
	if (std::min(line.direction.x, line.direction.y) != 1)
		throw Error("line direction must have minimal component 1");
}

}  // namespace

PersistenceDiagram restrict_to_line(const GridModule& module, const LineSample& line) {
	validate_line(line);
	auto at = [&](value_t t) -> GridPoint {
		return {line.base.x + t * line.direction.x, line.base.y + t * line.direction.y};
	};
	// Past t_max the module is in its stable tail on both axes.
	value_t t_max = 0;
	while (at(t_max).x < module.box().x || at(t_max).y < module.box().y) ++t_max;

	auto rank_between = [&](value_t t, value_t u) -> std::int64_t {
		if (t < 0) return 0;
		return module.rank_at(at(t), at(u));
	};

	PersistenceDiagram bars;
	for (value_t b = 0; b <= t_max; ++b) {
		for (value_t d = b + 1; d <= t_max; ++d) {
			std::int64_t count = rank_between(b, d - 1) - rank_between(b, d) -
			                     rank_between(b - 1, d - 1) + rank_between(b - 1, d);
			for (std::int64_t k = 0; k < count; ++k) bars.points.push_back({b, d});
		}
		std::int64_t essential = rank_between(b, t_max) - rank_between(b - 1, t_max);
		for (std::int64_t k = 0; k < essential; ++k)
			bars.points.push_back({b, infinite_value});
	}
	std::sort(bars.points.begin(), bars.points.end());
	return bars;
}

std::vector<LineSample> default_line_samples(const GridModule& a, const GridModule& b) {
	std::set<value_t> x_offsets, y_offsets;
	for (const GridModule* module : {&a, &b}) {
		for (value_t v : module->critical_xs())
			if (v > 0) x_offsets.insert(v);
		for (value_t v : module->critical_ys())
			if (v > 0) y_offsets.insert(v);
	}
	std::vector<LineSample> lines;
	lines.push_back({{0, 0}, {1, 1}});
	lines.push_back({{0, 0}, {1, 2}});
	lines.push_back({{0, 0}, {2, 1}});
	for (value_t v : x_offsets) lines.push_back({{v, 0}, {1, 1}});
	for (value_t v : y_offsets) lines.push_back({{0, v}, {1, 1}});
	return lines;
}

Rat matching_distance_estimate(const GridModule& a, const GridModule& b,
                               const std::vector<LineSample>& lines) {
	Rat best = Rat::of(0);
	for (const LineSample& line : lines) {
		validate_line(line);
		const Rat along = bottleneck(restrict_to_line(a, line), restrict_to_line(b, line)).value;
		const value_t weight = std::min(line.direction.x, line.direction.y);
		const Rat weighted =
		    along.is_infinite() ? along : Rat::of(along.num * weight, along.den);
		best = std::max(best, weighted);
	}
	return best;
}

}  // namespace hookprod
