#ifndef EXOTIC_OUTCOME_HPP
#define EXOTIC_OUTCOME_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace exotic {

// Either a value or a failure description. Used where failing is an
// expected answer (parsing, bounded searches) rather than a misuse.
template <class T>
class Outcome {
public:
    static Outcome success(T value) { return Outcome(std::in_place_index<0>, std::move(value)); }
    static Outcome failure(std::string why) { return Outcome(std::in_place_index<1>, std::move(why)); }

    bool ok() const { return state_.index() == 0; }
    explicit operator bool() const { return ok(); }

    const T &value() const
    {
        if (!ok())
            throw std::logic_error("Outcome::value() on failure: " + error());
        return std::get<0>(state_);
    }

    const std::string &error() const
    {
        static const std::string none;
        return ok() ? none : std::get<1>(state_);
    }

private:
    template <std::size_t I, class U>
    Outcome(std::in_place_index_t<I> tag, U &&u) : state_(tag, std::forward<U>(u))
    {
    }

    std::variant<T, std::string> state_;
};

} // namespace exotic

#endif
