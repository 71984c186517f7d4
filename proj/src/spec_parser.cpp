#include "qb/errors.hpp"
#include "qb/verify.hpp"

#include <cctype>
#include <charconv>

namespace qb {

namespace {

class Parser {
public:
    explicit Parser(std::string_view t) : t_(t) {}

    AnySpec spec()
    {
        skip();
        expect('x');
        expect('^');
        Number s = number();
        std::vector<BesselFactor> bessel;
        std::vector<AiryFactor> airy;
        std::size_t mixed_at = 0;
        while (skip(), i_ < t_.size()) {
            expect('*');
            skip();
            std::size_t at = i_;
            std::string name = ident();
            std::size_t reps = 1;
            if (name == "I" || name == "K") {
                expect('(');
                Number order = number();
                expect(',');
                Number scale = number();
                expect(')');
                reps = power();
                positive(scale, at);
                for (std::size_t k = 0; k < reps; ++k)
                    bessel.push_back({name == "I" ? BesselKind::I : BesselKind::K, order, scale});
            } else if (name == "Ai" || name == "Bi") {
                expect('(');
                Number scale = number();
                expect(')');
                reps = power();
                positive(scale, at);
                for (std::size_t k = 0; k < reps; ++k) airy.push_back({name == "Ai" ? AiryKind::Ai : AiryKind::Bi, scale});
            } else {
                throw ParseError("unknown factor '" + name + "'", at);
            }
            if (!bessel.empty() && !airy.empty() && mixed_at == 0) mixed_at = at;
        }
        if (mixed_at) throw ValidationError("cannot mix Bessel and Airy factors (position " + std::to_string(mixed_at) + ")");
        if (!airy.empty()) {
            if (airy.size() != 4) throw ValidationError("Airy specs need exactly four factors");
            return AirySpec{s, airy};
        }
        if (bessel.empty()) throw ParseError("expected at least one factor", i_);
        if (bessel.size() > 4) throw ValidationError("at most four Bessel factors are supported");
        return IntegralSpec{s, bessel};
    }

private:
    std::string_view t_;
    std::size_t i_ = 0;

    void skip()
    {
        while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
    }

    void expect(char c)
    {
        skip();
        if (i_ >= t_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", i_);
        if (t_[i_] != c) throw ParseError(std::string("expected '") + c + "' but found '" + t_[i_] + "'", i_);
        ++i_;
    }

    std::string ident()
    {
        std::size_t b = i_;
        while (i_ < t_.size() && std::isalpha(static_cast<unsigned char>(t_[i_]))) ++i_;
        if (b == i_) throw ParseError("expected a factor name", b);
        return std::string(t_.substr(b, i_ - b));
    }

    std::size_t power()
    {
        skip();
        if (i_ >= t_.size() || t_[i_] != '^') return 1;
        ++i_;
        skip();
        std::size_t at = i_, k = 0;
        auto r = std::from_chars(t_.data() + i_, t_.data() + t_.size(), k);
        if (r.ec != std::errc() || k == 0) throw ParseError("expected a positive repeat count", at);
        i_ = r.ptr - t_.data();
        return k;
    }

    static bool integral_text(std::string_view s)
    {
        return s.find_first_of(".eE") == std::string_view::npos;
    }

    Number number()
    {
        skip();
        std::size_t at = i_;
        std::size_t b = i_;
        if (i_ < t_.size() && (t_[i_] == '+' || t_[i_] == '-')) ++i_;
        while (i_ < t_.size() && (std::isdigit(static_cast<unsigned char>(t_[i_])) || t_[i_] == '.')) ++i_;
        if (i_ < t_.size() && (t_[i_] == 'e' || t_[i_] == 'E')) {
            ++i_;
            if (i_ < t_.size() && (t_[i_] == '+' || t_[i_] == '-')) ++i_;
            while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_]))) ++i_;
        }
        std::string_view text = t_.substr(b, i_ - b);
        if (!text.empty() && text.front() == '+') text.remove_prefix(1);
        double v = 0.0;
        auto r = std::from_chars(text.data(), text.data() + text.size(), v);
        if (text.empty() || r.ec != std::errc() || r.ptr != text.data() + text.size())
            throw ParseError("expected a number", at);
        bool exact = integral_text(text);
        long p = 0;
        if (exact) {
            auto rp = std::from_chars(text.data(), text.data() + text.size(), p);
            exact = rp.ec == std::errc();
        }
        skip();
        if (i_ < t_.size() && t_[i_] == '/') {
            if (!exact) throw ParseError("rational numerator must be an integer", at);
            ++i_;
            skip();
            std::size_t qat = i_;
            long q = 0;
            auto rq = std::from_chars(t_.data() + i_, t_.data() + t_.size(), q);
            if (rq.ec != std::errc() || q <= 0) throw ParseError("expected a positive integer denominator", qat);
            i_ = rq.ptr - t_.data();
            return Number(p, q);
        }
        if (exact) return Number(p, 1);
        return Number(v);
    }

    static void positive(const Number& scale, std::size_t at)
    {
        if (!(scale.value > 0.0)) throw ValidationError("scale must be positive (factor at position " + std::to_string(at) + ")");
    }
};

} // namespace

AnySpec parse_spec(std::string_view text)
{
    return Parser(text).spec();
}

} // namespace qb
