#include <algorithm>
#include <set>

#include "hookprod/distances.hpp"
#include "hookprod/errors.hpp"
#include "hookprod/product.hpp"

namespace hookprod {

std::string objective_name(Objective objective) {
	switch (objective) {
		case Objective::automatic: return "automatic";
		case Objective::exact_interleaving: return "exact_interleaving";
		case Objective::matching_distance_estimate: return "matching_distance_estimate";
	}
	return "unknown";
}

namespace {

struct Enumeration {
	std::vector<index_t> off_f, off_g;
	std::vector<std::vector<value_t>> t_for_f;  // per off_f position
	std::vector<std::vector<value_t>> t_for_g;  // per off_g position
	Matching base;                              // coverage of stored diagonal points
	std::int64_t cap = 0;
	bool truncated = false;
	std::vector<Matching> candidates;

	void emit(std::vector<std::pair<index_t, index_t>>& pairs,
	          std::vector<std::pair<index_t, value_t>>& f_diag, std::vector<char>& g_used) {
		if (truncated) return;
		std::size_t level = pairs.size() + f_diag.size();
		if (level == off_f.size()) {
			// assign every unmatched g point a diagonal source
			std::vector<index_t> free_g;
			for (std::size_t j = 0; j < off_g.size(); ++j)
				if (!g_used[j]) free_g.push_back(static_cast<index_t>(j));
			std::vector<value_t> choice(free_g.size());
			auto assign = [&](auto&& self, std::size_t pos) -> void {
				if (truncated) return;
				if (pos == free_g.size()) {
					if (static_cast<std::int64_t>(candidates.size()) >= cap) {
						truncated = true;
						return;
					}
					Matching m = base;
					for (const auto& [i, j] : pairs)
						m.pairs.push_back({off_f[static_cast<std::size_t>(i)],
						                   off_g[static_cast<std::size_t>(j)]});
					for (const auto& [i, t] : f_diag)
						m.f_to_diagonal.push_back({off_f[static_cast<std::size_t>(i)], t});
					for (std::size_t k = 0; k < free_g.size(); ++k)
						m.diagonal_to_g.push_back(
						    {choice[k],
						     off_g[static_cast<std::size_t>(free_g[k])]});
					candidates.push_back(std::move(m));
					return;
				}
				for (value_t t : t_for_g[static_cast<std::size_t>(free_g[pos])]) {
					choice[pos] = t;
					self(self, pos + 1);
				}
			};
			assign(assign, 0);
			return;
		}
		const index_t i = static_cast<index_t>(level);
		for (std::size_t j = 0; j < off_g.size(); ++j) {
			if (g_used[j]) continue;
			g_used[j] = 1;
			pairs.push_back({i, static_cast<index_t>(j)});
			emit(pairs, f_diag, g_used);
			pairs.pop_back();
			g_used[j] = 0;
		}
		for (value_t t : t_for_f[static_cast<std::size_t>(i)]) {
			f_diag.push_back({i, t});
			emit(pairs, f_diag, g_used);
			f_diag.pop_back();
		}
	}
};

std::vector<value_t> diagonal_candidates(const DiagramPoint& point,
                                         const std::set<value_t>& criticals) {
	std::set<value_t> ts = criticals;
	if (is_finite(point.death)) ts.insert((point.birth + point.death) / 2);
	if (ts.empty()) ts.insert(point.birth);
	return {ts.begin(), ts.end()};
}

}  // namespace

SearchReport gamma_bar_search(const PersistenceDiagram& pd_f, const PersistenceDiagram& pd_g,
                              const GridModule& target, const SearchConfig& config) {
	SearchReport report;
	const value_t max_eps =
	    config.max_eps.value_or(std::max(target.box().x, target.box().y));

	// Candidate enumeration: stored diagonal points stay on the diagonal (a
	// fresh copy at a critical value subsumes matching them off-diagonal);
	// off-diagonal points pair up or project.
	Enumeration enumeration;
	for (index_t i = 0; i < pd_f.size(); ++i) {
		const DiagramPoint& p = pd_f.points[static_cast<std::size_t>(i)];
		if (p.is_diagonal())
			enumeration.base.f_to_diagonal.push_back({i, p.birth});
		else
			enumeration.off_f.push_back(i);
	}
	for (index_t j = 0; j < pd_g.size(); ++j) {
		const DiagramPoint& p = pd_g.points[static_cast<std::size_t>(j)];
		if (p.is_diagonal())
			enumeration.base.diagonal_to_g.push_back({p.birth, j});
		else
			enumeration.off_g.push_back(j);
	}
	if (static_cast<std::int64_t>(enumeration.off_f.size()) > config.enumeration_bound ||
	    static_cast<std::int64_t>(enumeration.off_g.size()) > config.enumeration_bound)
		throw BudgetExceededWithReport(
		    "off-diagonal point count exceeds the enumeration bound of " +
		        std::to_string(config.enumeration_bound),
		    report);

	std::set<value_t> criticals;
	for (value_t v : target.critical_xs()) criticals.insert(v);
	for (value_t v : target.critical_ys()) criticals.insert(v);
	for (index_t i : enumeration.off_f)
		enumeration.t_for_f.push_back(
		    diagonal_candidates(pd_f.points[static_cast<std::size_t>(i)], criticals));
	for (index_t j : enumeration.off_g)
		enumeration.t_for_g.push_back(
		    diagonal_candidates(pd_g.points[static_cast<std::size_t>(j)], criticals));

	enumeration.cap = config.max_candidates;
	{
		std::vector<std::pair<index_t, index_t>> pairs;
		std::vector<std::pair<index_t, value_t>> f_diag;
		std::vector<char> g_used(enumeration.off_g.size(), 0);
		enumeration.emit(pairs, f_diag, g_used);
	}
	std::sort(enumeration.candidates.begin(), enumeration.candidates.end(),
	          [](const Matching& a, const Matching& b) { return encoding_less(a, b); });
	report.truncated = enumeration.truncated;

	// Objective selection happens once, so reported scores are never mixed.
	bool exact_feasible = !enumeration.truncated;
	HookDecomposition target_hooks;
	if (exact_feasible) {
		try {
			target_hooks = hook_decompose(target);
		} catch (const Error&) {
			exact_feasible = false;
		}
	}
	if (exact_feasible && target.total_critical_dim() > config.interleaving.dim_budget)
		exact_feasible = false;

	Objective objective = config.objective;
	if (objective == Objective::automatic)
		objective = exact_feasible ? Objective::exact_interleaving
		                           : Objective::matching_distance_estimate;
	if (objective == Objective::exact_interleaving && !exact_feasible)
		throw BudgetExceededWithReport(
		    "exact objective requested but the target is not within budget", report);
	report.objective = objective;

	const std::vector<LineSample> lines = default_line_samples(target, target);

	bool have_best = false;
	for (const Matching& candidate : enumeration.candidates) {
		++report.evaluations;
		const HookDecomposition hooks =
		    hooks_of_product(build_product(pd_f, pd_g, candidate));
		Rat score = Rat::infinity();
		if (objective == Objective::exact_interleaving) {
			// Prune: only values strictly below the incumbent matter.
			value_t cap_eps = max_eps;
			if (have_best && !report.best_value.is_infinite())
				cap_eps = std::min(cap_eps, report.best_value.num / report.best_value.den - 1);
			try {
				if (auto eps = interleaving_exact(hooks, target_hooks, cap_eps,
				                                  config.interleaving))
					score = Rat::of(*eps);
			} catch (const BudgetExceeded&) {
				++report.unscored;
			}
		} else {
			score = matching_distance_estimate(evaluate_hooks(hooks, target.box()), target,
			                                   lines);
		}
		if (!have_best || score < report.best_value) {
			report.best_value = score;
			report.best_matching = candidate;
			have_best = true;
		}
	}
	return report;
}

}  // namespace hookprod
