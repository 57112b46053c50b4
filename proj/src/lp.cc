/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <vcsp/lp.hh>
#include <vcsp/errors.hh>

#include <algorithm>
#include <map>
#include <sstream>

using std::map;
using std::optional;
using std::size_t;
using std::string;
using std::stringstream;
using std::uint64_t;
using std::vector;

namespace vcsp
{
    auto LinProgram::add_variable(string name, bool free) -> VarId
    {
        _names.push_back(std::move(name));
        _free.push_back(free);
        _objective.emplace_back(0);
        return VarId{ _names.size() - 1 };
    }

    auto LinProgram::set_objective(VarId var, const Rational & coefficient) -> void
    {
        _objective.at(var.index) = coefficient;
    }

    auto LinProgram::add_constraint(vector<Term> terms, Relation relation, const Rational & rhs, string name) -> size_t
    {
        for (auto & t : terms)
            if (t.var.index >= _names.size())
                fail(ErrorKind::BadParameter, "constraint references an undeclared variable");
        _constraints.push_back(Constraint{ std::move(terms), relation, rhs, std::move(name) });
        return _constraints.size() - 1;
    }

    namespace
    {
        auto sanitize(const string & name, size_t index) -> string
        {
            string result = "v" + std::to_string(index);
            if (! name.empty()) {
                result += "_";
                for (char c : name)
                    result += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
            }
            return result;
        }

        auto write_terms(stringstream & out, const vector<Term> & terms, const LinProgram & lp) -> void
        {
            if (terms.empty())
                out << " 0";
            for (auto & t : terms) {
                out << (t.coefficient < 0 ? " - " : " + ") << rational_string(abs(t.coefficient)) << " "
                    << sanitize(lp.variable_name(t.var), t.var.index);
            }
        }
    }

    auto LinProgram::to_lp_text() const -> string
    {
        stringstream out;
        out << "Minimize\n obj:";
        vector<Term> objective_terms;
        for (size_t j = 0 ; j < _names.size() ; ++j)
            if (_objective[j] != 0)
                objective_terms.push_back(Term{ VarId{ j }, _objective[j] });
        write_terms(out, objective_terms, *this);
        out << "\nSubject To\n";
        for (size_t i = 0 ; i < _constraints.size() ; ++i) {
            auto & c = _constraints[i];
            out << " " << (c.name.empty() ? "c" + std::to_string(i) : sanitize(c.name, i)) << ":";
            write_terms(out, c.terms, *this);
            switch (c.relation) {
                case Relation::LessEqual:    out << " <= "; break;
                case Relation::Equal:        out << " = "; break;
                case Relation::GreaterEqual: out << " >= "; break;
            }
            out << rational_string(c.rhs) << "\n";
        }
        bool any_free = false;
        for (size_t j = 0 ; j < _names.size() ; ++j)
            if (_free[j]) {
                if (! any_free)
                    out << "Bounds\n";
                any_free = true;
                out << " " << sanitize(_names[j], j) << " free\n";
            }
        out << "End\n";
        return out.str();
    }

    namespace
    {
        struct SparseEntry
        {
            size_t col;
            Rational value;
        };

        using SparseRow = vector<SparseEntry>;

        auto find_entry(const SparseRow & row, size_t col) -> const Rational *
        {
            auto i = std::lower_bound(row.begin(), row.end(), col,
                    [] (const SparseEntry & e, size_t c) { return e.col < c; });
            if (i != row.end() && i->col == col)
                return &i->value;
            return nullptr;
        }

        enum class PhaseResult
        {
            Optimal,
            Unbounded
        };

        // Simplex tableau with sparse rows and a dense reduced-cost row.
        // Entering and leaving variables follow Bland's rule throughout.
        struct Tableau
        {
            vector<SparseRow> rows;
            vector<Rational> rhs;
            vector<size_t> basis;
            vector<bool> active;
            vector<bool> barred;
            vector<Rational> reduced;
            Rational objective;
            size_t column_count = 0;
            uint64_t pivots = 0;
            uint64_t max_pivots = 0;

            auto price(const vector<Rational> & costs) -> void
            {
                reduced = costs;
                objective = 0;
                for (size_t i = 0 ; i < rows.size() ; ++i) {
                    if (! active[i])
                        continue;
                    auto & cb = costs[basis[i]];
                    if (cb == 0)
                        continue;
                    for (auto & e : rows[i])
                        reduced[e.col] -= cb * e.value;
                    objective += cb * rhs[i];
                }
            }

            auto pivot(size_t r, size_t c) -> void
            {
                if (++pivots > max_pivots)
                    fail(ErrorKind::ResourceLimit, "simplex exceeded " + std::to_string(max_pivots) + " pivots");

                Rational p = *find_entry(rows[r], c);
                if (p != 1) {
                    for (auto & e : rows[r])
                        e.value /= p;
                    rhs[r] /= p;
                }

                const SparseRow & pr = rows[r];
                for (size_t k = 0 ; k < rows.size() ; ++k) {
                    if (k == r || ! active[k])
                        continue;
                    auto f_ptr = find_entry(rows[k], c);
                    if (! f_ptr)
                        continue;
                    Rational f = *f_ptr;
                    SparseRow merged;
                    merged.reserve(rows[k].size() + pr.size());
                    auto a = rows[k].begin(), a_end = rows[k].end();
                    auto b = pr.begin(), b_end = pr.end();
                    while (a != a_end || b != b_end) {
                        if (b == b_end || (a != a_end && a->col < b->col)) {
                            merged.push_back(std::move(*a));
                            ++a;
                        }
                        else if (a == a_end || b->col < a->col) {
                            merged.push_back(SparseEntry{ b->col, -f * b->value });
                            ++b;
                        }
                        else {
                            Rational v = a->value - f * b->value;
                            if (v != 0)
                                merged.push_back(SparseEntry{ a->col, std::move(v) });
                            ++a;
                            ++b;
                        }
                    }
                    rows[k] = std::move(merged);
                    rhs[k] -= f * rhs[r];
                }

                Rational dc = reduced[c];
                if (dc != 0) {
                    for (auto & e : pr)
                        reduced[e.col] -= dc * e.value;
                    objective += dc * rhs[r];
                }
                basis[r] = c;
            }

            auto run() -> PhaseResult
            {
                while (true) {
                    size_t enter = column_count;
                    for (size_t j = 0 ; j < column_count ; ++j)
                        if (! barred[j] && reduced[j] < 0) {
                            enter = j;
                            break;
                        }
                    if (enter == column_count)
                        return PhaseResult::Optimal;

                    size_t leave = rows.size();
                    Rational best_ratio;
                    for (size_t i = 0 ; i < rows.size() ; ++i) {
                        if (! active[i])
                            continue;
                        auto a = find_entry(rows[i], enter);
                        if (! a || *a <= 0)
                            continue;
                        Rational ratio = rhs[i] / *a;
                        if (leave == rows.size() || ratio < best_ratio
                                || (ratio == best_ratio && basis[i] < basis[leave])) {
                            leave = i;
                            best_ratio = std::move(ratio);
                        }
                    }
                    if (leave == rows.size())
                        return PhaseResult::Unbounded;
                    pivot(leave, enter);
                }
            }
        };

        struct RowOrigin
        {
            size_t constraint;
            int sign;
            size_t identity_column;
        };
    }

    auto solve(const LinProgram & lp, const SolveOptions & options) -> LpOutcome
    {
        LpOutcome outcome;
        outcome.duals.assign(lp.constraints().size(), Rational(0));

        size_t n = lp.variable_count();
        vector<size_t> pos_col(n), neg_col(n, SIZE_MAX);
        size_t next = 0;
        for (size_t j = 0 ; j < n ; ++j) {
            pos_col[j] = next++;
            if (lp.is_free(VarId{ j }))
                neg_col[j] = next++;
        }
        size_t structural = next;

        struct PendingRow
        {
            map<size_t, Rational> coefficients;
            Relation relation;
            Rational rhs;
            size_t constraint;
            int sign;
        };
        vector<PendingRow> pending;

        for (size_t i = 0 ; i < lp.constraints().size() ; ++i) {
            auto & c = lp.constraints()[i];
            PendingRow row{ { }, c.relation, c.rhs, i, 1 };
            for (auto & t : c.terms) {
                row.coefficients[pos_col[t.var.index]] += t.coefficient;
                if (neg_col[t.var.index] != SIZE_MAX)
                    row.coefficients[neg_col[t.var.index]] -= t.coefficient;
            }
            std::erase_if(row.coefficients, [] (const auto & kv) { return kv.second == 0; });

            if (row.coefficients.empty()) {
                bool ok = (c.relation == Relation::LessEqual && 0 <= c.rhs)
                    || (c.relation == Relation::Equal && 0 == c.rhs)
                    || (c.relation == Relation::GreaterEqual && 0 >= c.rhs);
                if (! ok) {
                    outcome.status = LpStatus::Infeasible;
                    return outcome;
                }
                continue;
            }

            if (row.rhs < 0) {
                row.sign = -1;
                row.rhs = -row.rhs;
                for (auto & [col, v] : row.coefficients)
                    v = -v;
                if (row.relation == Relation::LessEqual)
                    row.relation = Relation::GreaterEqual;
                else if (row.relation == Relation::GreaterEqual)
                    row.relation = Relation::LessEqual;
            }
            pending.push_back(std::move(row));
        }

        // column layout: structural, then slack and surplus, then artificial
        size_t slack_count = 0, artificial_count = 0;
        for (auto & r : pending) {
            if (r.relation != Relation::Equal)
                ++slack_count;
            if (r.relation != Relation::LessEqual)
                ++artificial_count;
        }
        size_t first_slack = structural, first_artificial = structural + slack_count;

        Tableau t;
        t.column_count = first_artificial + artificial_count;
        t.max_pivots = options.max_pivots;
        t.barred.assign(t.column_count, false);
        vector<RowOrigin> origins;

        size_t next_slack = first_slack, next_artificial = first_artificial;
        for (auto & r : pending) {
            SparseRow row;
            row.reserve(r.coefficients.size() + 2);
            for (auto & [col, v] : r.coefficients)
                row.push_back(SparseEntry{ col, v });
            size_t identity = 0;
            if (r.relation == Relation::LessEqual) {
                identity = next_slack++;
                row.push_back(SparseEntry{ identity, Rational(1) });
            }
            else {
                if (r.relation == Relation::GreaterEqual)
                    row.push_back(SparseEntry{ next_slack++, Rational(-1) });
                identity = next_artificial++;
                row.push_back(SparseEntry{ identity, Rational(1) });
            }
            t.rows.push_back(std::move(row));
            t.rhs.push_back(r.rhs);
            t.basis.push_back(identity);
            t.active.push_back(true);
            origins.push_back(RowOrigin{ r.constraint, r.sign, identity });
        }

        if (artificial_count > 0) {
            vector<Rational> phase_one(t.column_count, Rational(0));
            for (size_t j = first_artificial ; j < t.column_count ; ++j)
                phase_one[j] = 1;
            t.price(phase_one);
            t.run();
            if (t.objective > 0) {
                outcome.status = LpStatus::Infeasible;
                outcome.pivots = t.pivots;
                return outcome;
            }

            // drive remaining artificials out of the basis, dropping redundant rows
            for (size_t i = 0 ; i < t.rows.size() ; ++i) {
                if (t.basis[i] < first_artificial)
                    continue;
                size_t col = SIZE_MAX;
                for (auto & e : t.rows[i])
                    if (e.col < first_artificial) {
                        col = e.col;
                        break;
                    }
                if (col == SIZE_MAX)
                    t.active[i] = false;
                else
                    t.pivot(i, col);
            }
            for (size_t j = first_artificial ; j < t.column_count ; ++j)
                t.barred[j] = true;
        }

        vector<Rational> costs(t.column_count, Rational(0));
        for (size_t j = 0 ; j < n ; ++j) {
            costs[pos_col[j]] = lp.objective(VarId{ j });
            if (neg_col[j] != SIZE_MAX)
                costs[neg_col[j]] = -lp.objective(VarId{ j });
        }
        t.price(costs);
        auto result = t.run();
        outcome.pivots = t.pivots;
        if (result == PhaseResult::Unbounded) {
            outcome.status = LpStatus::Unbounded;
            return outcome;
        }

        vector<Rational> column_values(t.column_count, Rational(0));
        for (size_t i = 0 ; i < t.rows.size() ; ++i)
            if (t.active[i])
                column_values[t.basis[i]] = t.rhs[i];

        outcome.status = LpStatus::Optimal;
        outcome.value = t.objective;
        outcome.values.assign(n, Rational(0));
        for (size_t j = 0 ; j < n ; ++j) {
            outcome.values[j] = column_values[pos_col[j]];
            if (neg_col[j] != SIZE_MAX)
                outcome.values[j] -= column_values[neg_col[j]];
        }
        for (auto & o : origins)
            outcome.duals[o.constraint] = -t.reduced[o.identity_column] * o.sign;
        return outcome;
    }

    auto objective_value(const LinProgram & lp, const vector<Rational> & values) -> Rational
    {
        Rational result = 0;
        for (size_t j = 0 ; j < lp.variable_count() ; ++j)
            result += lp.objective(VarId{ j }) * values.at(j);
        return result;
    }

    auto check_assignment(const LinProgram & lp, const vector<Rational> & values) -> optional<string>
    {
        if (values.size() != lp.variable_count())
            return "assignment has the wrong number of variables";
        for (size_t j = 0 ; j < values.size() ; ++j)
            if (! lp.is_free(VarId{ j }) && values[j] < 0)
                return "variable " + lp.variable_name(VarId{ j }) + " is negative";
        for (size_t i = 0 ; i < lp.constraints().size() ; ++i) {
            auto & c = lp.constraints()[i];
            Rational lhs = 0;
            for (auto & t : c.terms)
                lhs += t.coefficient * values[t.var.index];
            bool ok = (c.relation == Relation::LessEqual && lhs <= c.rhs)
                || (c.relation == Relation::Equal && lhs == c.rhs)
                || (c.relation == Relation::GreaterEqual && lhs >= c.rhs);
            if (! ok)
                return "constraint " + (c.name.empty() ? std::to_string(i) : c.name) + " violated: "
                    + rational_string(lhs) + " vs " + rational_string(c.rhs);
        }
        return std::nullopt;
    }
}
