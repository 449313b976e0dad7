#include "hookprod/matching.hpp"

#include <algorithm>
#include <sstream>

#include "hookprod/errors.hpp"

namespace hookprod {

void Matching::validate(const PersistenceDiagram& pd_f, const PersistenceDiagram& pd_g) const {
	std::vector<int> f_used(static_cast<std::size_t>(pd_f.size()), 0);
	std::vector<int> g_used(static_cast<std::size_t>(pd_g.size()), 0);
	auto use = [](std::vector<int>& used, index_t i, const char* side) {
		if (i < 0 || i >= static_cast<index_t>(used.size()))
			throw InvalidMatching(std::string(side) + " index " + std::to_string(i) +
			                      " out of range");
		if (used[static_cast<std::size_t>(i)]++)
			throw InvalidMatching(std::string(side) + " index " + std::to_string(i) +
			                      " used more than once");
	};
	for (const auto& e : pairs) {
		use(f_used, e.f_index, "f");
		use(g_used, e.g_index, "g");
	}
	for (const auto& e : f_to_diagonal) {
		use(f_used, e.f_index, "f");
		if (e.t < 0) throw InvalidMatching("diagonal parameter must be a natural");
	}
	for (const auto& e : diagonal_to_g) {
		use(g_used, e.g_index, "g");
		if (e.t < 0) throw InvalidMatching("diagonal parameter must be a natural");
	}
	for (index_t i = 0; i < pd_f.size(); ++i)
		if (!f_used[static_cast<std::size_t>(i)])
			throw UncoveredPoint("stored f point " + std::to_string(i) + " has no match");
	for (index_t j = 0; j < pd_g.size(); ++j)
		if (!g_used[static_cast<std::size_t>(j)])
			throw UncoveredPoint("stored g point " + std::to_string(j) + " has no match");
}

Matching Matching::inverse() const {
	Matching inv;
	for (const auto& e : pairs) inv.pairs.push_back({e.g_index, e.f_index});
	for (const auto& e : f_to_diagonal) inv.diagonal_to_g.push_back({e.t, e.f_index});
	for (const auto& e : diagonal_to_g) inv.f_to_diagonal.push_back({e.g_index, e.t});
	return inv;
}

std::vector<std::array<value_t, 3>> Matching::encode() const {
	std::vector<std::array<value_t, 3>> enc;
	enc.reserve(static_cast<std::size_t>(entry_count()));
	for (const auto& e : pairs) enc.push_back({0, e.f_index, e.g_index});
	for (const auto& e : f_to_diagonal) enc.push_back({1, e.f_index, e.t});
	for (const auto& e : diagonal_to_g) enc.push_back({2, e.t, e.g_index});
	std::sort(enc.begin(), enc.end());
	return enc;
}

bool encoding_less(const Matching& a, const Matching& b) { return a.encode() < b.encode(); }

Matching parse_matching(const std::string& text) {
	Matching m;
	std::istringstream in(text);
	std::string line;
	int line_no = 0;
	while (std::getline(in, line)) {
		++line_no;
		std::istringstream ls(line);
		std::string kind;
		if (!(ls >> kind) || kind[0] == '#') continue;
		std::string a, b;
		if (!(ls >> a >> b))
			throw SyntaxError("line " + std::to_string(line_no) + ": expected two arguments");
		std::string trailing;
		if (ls >> trailing && trailing[0] != '#')
			throw SyntaxError("line " + std::to_string(line_no) + ": trailing tokens");
		value_t va, vb;
		try {
			va = parse_value(a);
			vb = parse_value(b);
		} catch (const SyntaxError& e) {
			throw SyntaxError("line " + std::to_string(line_no) + ": " + e.what());
		}
		if (kind == "match")
			m.pairs.push_back({va, vb});
		else if (kind == "fdiag")
			m.f_to_diagonal.push_back({va, vb});
		else if (kind == "gdiag")
			m.diagonal_to_g.push_back({va, vb});
		else
			throw SyntaxError("line " + std::to_string(line_no) + ": unknown entry '" + kind +
			                  "'");
	}
	return m;
}

std::string render_matching(const Matching& matching) {
	static const char* kinds[] = {"match", "fdiag", "gdiag"};
	std::string out;
	for (const auto& e : matching.encode())
		out += std::string(kinds[e[0]]) + ' ' + std::to_string(e[1]) + ' ' +
		       std::to_string(e[2]) + '\n';
	return out;
}

}  // namespace hookprod
