#include "hookprod/bipersistence.hpp"

#include <set>

#include "hookprod/errors.hpp"
#include "hookprod/persistence.hpp"

namespace hookprod {

GridPoint default_box(const FilteredComplex& complex) {
	if (!complex.has_g()) throw MissingG();
	return {complex.max_value(Function::f) + 2, complex.max_value(Function::g) + 2};
}

GridModule grid_module_of_pair(const FilteredComplex& complex, index_t degree, value_t prime,
                               GridPoint box) {
	if (!complex.has_g()) throw MissingG();
	std::set<value_t> xset = {0, box.x - 1, box.x};
	std::set<value_t> yset = {0, box.y - 1, box.y};
	std::set<value_t> crit_x, crit_y;
	for (index_t i = 0; i < complex.size(); ++i) {
		if (value_t v = complex.value(i, Function::f); v <= box.x) {
			xset.insert(v);
			crit_x.insert(v);
		}
		if (value_t v = complex.value(i, Function::g); v <= box.y) {
			yset.insert(v);
			crit_y.insert(v);
		}
	}
	std::vector<value_t> xs(xset.begin(), xset.end()), ys(yset.begin(), yset.end());
	const index_t nx = static_cast<index_t>(xs.size()), ny = static_cast<index_t>(ys.size());
	const index_t n = nx * ny;
	std::vector<std::int64_t> dims(static_cast<std::size_t>(n), 0);
	std::vector<std::int64_t> ranks(static_cast<std::size_t>(n * n), 0);
	for (index_t ix = 0; ix < nx; ++ix)
		for (index_t iy = 0; iy < ny; ++iy) {
			const GridPoint r{xs[static_cast<std::size_t>(ix)], ys[static_cast<std::size_t>(iy)]};
			for (index_t jx = ix; jx < nx; ++jx)
				for (index_t jy = iy; jy < ny; ++jy) {
					const GridPoint s{xs[static_cast<std::size_t>(jx)],
					                  ys[static_cast<std::size_t>(jy)]};
					ranks[static_cast<std::size_t>((ix * ny + iy) * n + jx * ny + jy)] =
					    inclusion_rank(complex, degree, prime, r, s);
				}
			dims[static_cast<std::size_t>(ix * ny + iy)] =
			    ranks[static_cast<std::size_t>((ix * ny + iy) * n + ix * ny + iy)];
		}
	return GridModule::from_samples(box, std::move(xs), std::move(ys),
	                                std::vector<value_t>(crit_x.begin(), crit_x.end()),
	                                std::vector<value_t>(crit_y.begin(), crit_y.end()),
	                                std::move(dims), std::move(ranks));
}

GridModule grid_module_of_pair(const FilteredComplex& complex, index_t degree, value_t prime) {
	return grid_module_of_pair(complex, degree, prime, default_box(complex));
}

std::pair<PersistenceDiagram, PersistenceDiagram> axis_barcodes(const FilteredComplex& complex,
                                                                index_t degree, value_t prime) {
	if (!complex.has_g()) throw MissingG();
	return {compute_diagram(complex, Function::f, degree, prime),
	        compute_diagram(complex, Function::g, degree, prime)};
}

}  // namespace hookprod
