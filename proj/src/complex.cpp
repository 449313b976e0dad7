#include "hookprod/complex.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "hookprod/errors.hpp"

namespace hookprod {

std::string format_value(value_t v) { return is_finite(v) ? std::to_string(v) : "inf"; }

value_t parse_value(const std::string& token) {
	if (token == "inf") return infinite_value;
	value_t v = 0;
	auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
	if (ec != std::errc() || ptr != token.data() + token.size() || v < 0)
		throw SyntaxError("expected a natural number or 'inf', got '" + token + "'");
	return v;
}

std::vector<Simplex> Simplex::faces() const {
	std::vector<Simplex> result;
	if (vertices.size() <= 1) return result;
	for (std::size_t skip = 0; skip < vertices.size(); ++skip) {
		Simplex face;
		face.vertices.reserve(vertices.size() - 1);
		for (std::size_t i = 0; i < vertices.size(); ++i)
			if (i != skip) face.vertices.push_back(vertices[i]);
		result.push_back(std::move(face));
	}
	return result;
}

std::string Simplex::to_string() const {
	std::string out = "{";
	for (std::size_t i = 0; i < vertices.size(); ++i) {
		if (i) out += ' ';
		out += std::to_string(vertices[i]);
	}
	return out + "}";
}

Simplex make_simplex(std::vector<index_t> vertices) {
	std::sort(vertices.begin(), vertices.end());
	if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
		throw SyntaxError("simplex has a repeated vertex");
	if (!vertices.empty() && vertices.front() < 0)
		throw SyntaxError("vertex identifiers must be naturals");
	return Simplex{std::move(vertices)};
}

FilteredComplex::FilteredComplex(std::vector<Simplex> simplices, std::vector<value_t> f_values,
                                 std::vector<value_t> g_values)
    : simplices_(std::move(simplices)), f_values_(std::move(f_values)),
      g_values_(std::move(g_values)) {
	if (f_values_.size() != simplices_.size() ||
	    (!g_values_.empty() && g_values_.size() != simplices_.size()))
		throw SyntaxError("value lists do not match the simplex list");

	std::map<Simplex, index_t> index;
	for (index_t i = 0; i < size(); ++i) {
		const Simplex& s = simplices_[static_cast<std::size_t>(i)];
		if (s.vertices.empty()) throw SyntaxError("empty simplex");
		if (!index.emplace(s, i).second)
			throw SyntaxError("duplicate simplex " + s.to_string());
		if (f_values_[static_cast<std::size_t>(i)] < 0 ||
		    (has_g() && g_values_[static_cast<std::size_t>(i)] < 0))
			throw SyntaxError("filtration values must be naturals");
	}
	for (index_t i = 0; i < size(); ++i) {
		const Simplex& s = simplices_[static_cast<std::size_t>(i)];
		for (const Simplex& face : s.faces()) {
			auto it = index.find(face);
			if (it == index.end())
				throw ClosureError("missing face " + face.to_string() + " of simplex " +
				                   s.to_string());
			index_t fi = it->second;
			if (f_values_[static_cast<std::size_t>(fi)] > f_values_[static_cast<std::size_t>(i)])
				throw MonotonicityError("f value of face " + face.to_string() +
				                        " exceeds that of coface " + s.to_string());
			if (has_g() &&
			    g_values_[static_cast<std::size_t>(fi)] > g_values_[static_cast<std::size_t>(i)])
				throw MonotonicityError("g value of face " + face.to_string() +
				                        " exceeds that of coface " + s.to_string());
		}
	}
}

value_t FilteredComplex::value(index_t i, Function which) const {
	if (which == Function::f) return f_values_[static_cast<std::size_t>(i)];
	if (!has_g()) throw MissingG();
	return g_values_[static_cast<std::size_t>(i)];
}

std::optional<index_t> FilteredComplex::index_of(const Simplex& s) const {
	for (index_t i = 0; i < size(); ++i)
		if (simplices_[static_cast<std::size_t>(i)] == s) return i;
	return std::nullopt;
}

value_t FilteredComplex::max_value(Function which) const {
	value_t m = 0;
	for (index_t i = 0; i < size(); ++i) m = std::max(m, value(i, which));
	return m;
}

namespace {

FilteredComplex filter_complex(const FilteredComplex& complex, auto keep) {
	std::vector<Simplex> simplices;
	std::vector<value_t> fs, gs;
	for (index_t i = 0; i < complex.size(); ++i) {
		if (!keep(i)) continue;
		simplices.push_back(complex.simplex(i));
		fs.push_back(complex.f_values()[static_cast<std::size_t>(i)]);
		if (complex.has_g()) gs.push_back(complex.g_values()[static_cast<std::size_t>(i)]);
	}
	return FilteredComplex(std::move(simplices), std::move(fs), std::move(gs));
}

}  // namespace

FilteredComplex sublevel(const FilteredComplex& complex, Function which, value_t threshold) {
	if (which == Function::g && !complex.has_g()) throw MissingG();
	return filter_complex(complex,
	                      [&](index_t i) { return complex.value(i, which) <= threshold; });
}

FilteredComplex sublevel_pair(const FilteredComplex& complex, GridPoint threshold) {
	if (!complex.has_g()) throw MissingG();
	return filter_complex(complex, [&](index_t i) {
		return complex.value(i, Function::f) <= threshold.x &&
		       complex.value(i, Function::g) <= threshold.y;
	});
}

FilteredComplex parse_complex(const std::string& text) {
	std::vector<Simplex> simplices;
	std::vector<value_t> fs, gs;
	std::istringstream in(text);
	std::string line;
	int line_no = 0;
	bool saw_g = false, saw_no_g = false;
	while (std::getline(in, line)) {
		++line_no;
		std::istringstream ls(line);
		std::string token;
		if (!(ls >> token) || token[0] == '#') continue;
		auto fail = [&](const std::string& msg) -> SyntaxError {
			return SyntaxError("line " + std::to_string(line_no) + ": " + msg);
		};
		if (token != "simplex") throw fail("expected 'simplex', got '" + token + "'");

		std::vector<index_t> vertices;
		std::optional<value_t> f_val, g_val;
		while (ls >> token) {
			if (token[0] == '#') break;
			auto eq = token.find('=');
			if (eq != std::string::npos) {
				std::string key = token.substr(0, eq);
				value_t v;
				try {
					v = parse_value(token.substr(eq + 1));
				} catch (const SyntaxError& e) {
					throw fail(e.what());
				}
				if (!is_finite(v)) throw fail("filtration values must be finite");
				if (key == "f" && !f_val)
					f_val = v;
				else if (key == "g" && !g_val)
					g_val = v;
				else
					throw fail("unexpected assignment '" + token + "'");
			} else {
				try {
					vertices.push_back(parse_value(token));
				} catch (const SyntaxError&) {
					throw fail("bad vertex '" + token + "'");
				}
			}
		}
		if (vertices.empty()) throw fail("simplex has no vertices");
		if (!f_val) throw fail("missing f= value");
		(g_val ? saw_g : saw_no_g) = true;
		if (saw_g && saw_no_g) throw fail("either all or no lines may carry g=");
		Simplex s;
		try {
			s = make_simplex(std::move(vertices));
		} catch (const SyntaxError& e) {
			throw fail(e.what());
		}
		simplices.push_back(std::move(s));
		fs.push_back(*f_val);
		if (g_val) gs.push_back(*g_val);
	}
	return FilteredComplex(std::move(simplices), std::move(fs), std::move(gs));
}

std::string render_complex(const FilteredComplex& complex) {
	std::string out;
	for (index_t i = 0; i < complex.size(); ++i) {
		out += "simplex";
		for (index_t v : complex.simplex(i).vertices) out += ' ' + std::to_string(v);
		out += "  f=" + std::to_string(complex.f_values()[static_cast<std::size_t>(i)]);
		if (complex.has_g())
			out += " g=" + std::to_string(complex.g_values()[static_cast<std::size_t>(i)]);
		out += '\n';
	}
	return out;
}

}  // namespace hookprod
