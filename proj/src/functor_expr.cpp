#include "grext/functor_expr.hpp"

#include "grext/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace grext {

namespace fe {

ExprPtr constant(int m)
{
	if (m < 0)
		throw std::invalid_argument("constant: negative rank");
	return std::make_shared<FunctorExpr>(FunctorExpr{FunctorExpr::Kind::Const, m, nullptr, nullptr});
}

ExprPtr ab()
{
	return std::make_shared<FunctorExpr>(FunctorExpr{FunctorExpr::Kind::Ab, 0, nullptr, nullptr});
}

ExprPtr ab_pow(int d)
{
	if (d < 1)
		throw std::invalid_argument("ab_pow: need d >= 1");
	if (d == 1)
		return ab();
	return std::make_shared<FunctorExpr>(FunctorExpr{FunctorExpr::Kind::AbPow, d, nullptr, nullptr});
}

ExprPtr passi(int d)
{
	if (d < 0)
		throw std::invalid_argument("passi: need d >= 0");
	return std::make_shared<FunctorExpr>(FunctorExpr{FunctorExpr::Kind::Passi, d, nullptr, nullptr});
}

ExprPtr tensor(ExprPtr l, ExprPtr r)
{
	return std::make_shared<FunctorExpr>(FunctorExpr{FunctorExpr::Kind::Tensor, 0, std::move(l), std::move(r)});
}

ExprPtr sum(ExprPtr l, ExprPtr r)
{
	return std::make_shared<FunctorExpr>(FunctorExpr{FunctorExpr::Kind::Sum, 0, std::move(l), std::move(r)});
}

} // namespace fe

int degree(const ExprPtr &f)
{
	switch (f->kind) {
	case FunctorExpr::Kind::Const:
		return 0;
	case FunctorExpr::Kind::Ab:
		return 1;
	case FunctorExpr::Kind::AbPow:
	case FunctorExpr::Kind::Passi:
		return f->param;
	case FunctorExpr::Kind::Tensor:
		return degree(f->left) + degree(f->right);
	case FunctorExpr::Kind::Sum:
		return std::max(degree(f->left), degree(f->right));
	}
	return 0;
}

std::string expr_key(const ExprPtr &f)
{
	switch (f->kind) {
	case FunctorExpr::Kind::Const:
		return "const(" + std::to_string(f->param) + ")";
	case FunctorExpr::Kind::Ab:
		return "a";
	case FunctorExpr::Kind::AbPow:
		return "a^" + std::to_string(f->param);
	case FunctorExpr::Kind::Passi:
		return "passi(" + std::to_string(f->param) + ")";
	case FunctorExpr::Kind::Tensor:
		return "(" + expr_key(f->left) + "*" + expr_key(f->right) + ")";
	case FunctorExpr::Kind::Sum:
		return "(" + expr_key(f->left) + "+" + expr_key(f->right) + ")";
	}
	return "?";
}

namespace {

struct Parser {
	const std::string &s;
	std::size_t pos = 0;

	void skip()
	{
		while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos])))
			++pos;
	}

	bool eat(char c)
	{
		skip();
		if (pos < s.size() && s[pos] == c) {
			++pos;
			return true;
		}
		return false;
	}

	int integer()
	{
		skip();
		std::size_t start = pos;
		while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos])))
			++pos;
		if (pos == start)
			throw parse_error("expected integer", start);
		return std::stoi(s.substr(start, pos - start));
	}

	ExprPtr atom()
	{
		skip();
		if (pos >= s.size())
			throw parse_error("unexpected end of expression", pos);
		if (eat('(')) {
			ExprPtr e = expr();
			if (!eat(')'))
				throw parse_error("expected ')'", pos);
			return e;
		}
		if (s[pos] == 'a') {
			++pos;
			if (eat('^'))
				return fe::ab_pow(integer());
			return fe::ab();
		}
		if (s.compare(pos, 6, "passi(") == 0) {
			pos += 6;
			int d = integer();
			if (!eat(')'))
				throw parse_error("expected ')'", pos);
			return fe::passi(d);
		}
		if (s.compare(pos, 6, "const(") == 0) {
			pos += 6;
			int m = integer();
			if (!eat(')'))
				throw parse_error("expected ')'", pos);
			return fe::constant(m);
		}
		throw parse_error("expected atom", pos);
	}

	static bool pure_ab_power(const ExprPtr &e, int &d)
	{
		if (e->kind == FunctorExpr::Kind::Ab) {
			d = 1;
			return true;
		}
		if (e->kind == FunctorExpr::Kind::AbPow) {
			d = e->param;
			return true;
		}
		return false;
	}

	ExprPtr term()
	{
		ExprPtr e = atom();
		while (true) {
			skip();
			if (pos < s.size() && s[pos] == '*') {
				++pos;
				ExprPtr r = atom();
				int dl = 0, dr = 0;
				if (pure_ab_power(e, dl) && pure_ab_power(r, dr))
					e = fe::ab_pow(dl + dr);
				else
					e = fe::tensor(e, r);
			} else
				break;
		}
		return e;
	}

	ExprPtr expr()
	{
		ExprPtr e = term();
		while (true) {
			skip();
			if (pos < s.size() && s[pos] == '+') {
				++pos;
				e = fe::sum(e, term());
			} else
				break;
		}
		return e;
	}
};

} // namespace

ExprPtr parse_functor(const std::string &text, int max_degree)
{
	Parser p{text};
	ExprPtr e = p.expr();
	p.skip();
	if (p.pos != text.size())
		throw parse_error("trailing input", p.pos);
	if (degree(e) > max_degree)
		throw parse_error("functor degree exceeds configured bound " +
		                      std::to_string(max_degree),
		                  0);
	return e;
}

} // namespace grext
