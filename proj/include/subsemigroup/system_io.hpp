#pragma once

// JSON system files:
//   {"alphabet": ["a", "b"],
//    "substitutions": {"f": {"a": "ab", "b": "ba"}, ...},
//    "title": "...", "notes": "..."}          (title, notes optional)

#include "subsemigroup/semigroup.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace subsemigroup {

struct SystemFile {
    GeneratorSet generators;
    std::optional<std::string> title;
    std::optional<std::string> notes;
};

namespace detail {

inline const nlohmann::ordered_json& require_field(const nlohmann::ordered_json& obj, const std::string& key,
                                                   const std::string& path)
{
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ValidationError(path + key + ": missing field");
    }
    return *it;
}

inline std::optional<std::string> optional_string(const nlohmann::ordered_json& obj, const std::string& key)
{
    auto it = obj.find(key);
    if (it == obj.end()) {
        return std::nullopt;
    }
    if (!it->is_string()) {
        throw ValidationError(key + ": expected a string");
    }
    return it->get<std::string>();
}

} // namespace detail

/// Parses and validates a system file. Diagnostics name the first violation with
/// its field path, e.g. "substitutions.f.a: erasing morphism rejected".
inline SystemFile parse_system(std::string_view text)
{
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ValidationError("system file must be a JSON object");
    }
    for (const auto& [key, value] : doc.items()) {
        if (key != "alphabet" && key != "substitutions" && key != "title" && key != "notes") {
            throw ValidationError(key + ": unknown field");
        }
    }

    const auto& letters_json = detail::require_field(doc, "alphabet", "");
    if (!letters_json.is_array()) {
        throw ValidationError("alphabet: expected an array of single-character strings");
    }
    std::string letters;
    for (std::size_t i = 0; i < letters_json.size(); ++i) {
        const auto& l = letters_json[i];
        if (!l.is_string() || l.get_ref<const std::string&>().size() != 1) {
            throw ValidationError("alphabet[" + std::to_string(i) + "]: expected a single-character string");
        }
        letters += l.get_ref<const std::string&>();
    }
    Alphabet alphabet = [&] {
        try {
            return Alphabet(letters);
        } catch (const Error& e) {
            throw ValidationError(std::string("alphabet: ") + e.what());
        }
    }();

    const auto& subs = detail::require_field(doc, "substitutions", "");
    if (!subs.is_object() || subs.empty()) {
        throw ValidationError("substitutions: expected a nonempty object");
    }
    std::vector<Substitution> generators;
    for (const auto& [name, map] : subs.items()) {
        const std::string path = "substitutions." + name;
        if (!map.is_object()) {
            throw ValidationError(path + ": expected an object from letter to image");
        }
        for (const auto& [letter, image] : map.items()) {
            if (letter.size() != 1 || !alphabet.contains(letter.front())) {
                throw ValidationError(path + "." + letter + ": '" + letter + "' is not a letter of the alphabet");
            }
            if (!image.is_string()) {
                throw ValidationError(path + "." + letter + ": expected an image string");
            }
        }
        std::vector<std::string> images;
        for (char a : alphabet.letters()) {
            const std::string key(1, a);
            const std::string at = path + "." + key;
            auto it = map.find(key);
            if (it == map.end()) {
                throw ValidationError(at + ": missing image (substitutions are total on the alphabet)");
            }
            const auto& image = it->get_ref<const std::string&>();
            if (image.empty()) {
                throw ValidationError(at + ": erasing morphism rejected (images must be nonempty)");
            }
            if (auto c = alphabet.first_foreign(image)) {
                throw ValidationError(at + ": letter '" + std::string(1, *c) + "' is not in the alphabet");
            }
            images.push_back(image);
        }
        try {
            generators.emplace_back(alphabet, std::move(images), name);
        } catch (const Error& e) {
            throw ValidationError(path + ": " + e.what());
        }
    }

    try {
        return SystemFile{GeneratorSet(alphabet, std::move(generators)), detail::optional_string(doc, "title"),
                          detail::optional_string(doc, "notes")};
    } catch (const ValidationError&) {
        throw;
    } catch (const Error& e) {
        throw ValidationError(std::string("substitutions: ") + e.what());
    }
}

inline nlohmann::ordered_json system_to_json(const SystemFile& s)
{
    nlohmann::ordered_json doc;
    if (s.title) {
        doc["title"] = *s.title;
    }
    doc["alphabet"] = nlohmann::ordered_json::array();
    for (char a : s.generators.alphabet().letters()) {
        doc["alphabet"].push_back(std::string(1, a));
    }
    auto& subs = doc["substitutions"] = nlohmann::ordered_json::object();
    for (const auto& f : s.generators.generators()) {
        auto& m = subs[f.name()] = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < s.generators.alphabet().size(); ++i) {
            m[std::string(1, s.generators.alphabet().letter(i))] = f.image_at(i);
        }
    }
    if (s.notes) {
        doc["notes"] = *s.notes;
    }
    return doc;
}

inline std::string serialize_system(const SystemFile& s) { return system_to_json(s).dump(2) + "\n"; }

inline std::string serialize_system(const GeneratorSet& g) { return serialize_system(SystemFile{g, {}, {}}); }

} // namespace subsemigroup
