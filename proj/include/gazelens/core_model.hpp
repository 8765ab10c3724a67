#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gazelens/error.hpp"

namespace gazelens {

/**
 * Parsed brushstroke identifier, "brushtype_startingcolour_artworkref_seq".
 * Tokens never contain an underscore; it is the field separator.
 */
struct BrushId {
    std::string brush_type;
    std::uint32_t start_colour_packed = 0;
    std::string artwork_ref;
    std::uint64_t seq = 0;

    bool operator==(const BrushId&) const = default;
};

struct Rgba {
    std::uint8_t r = 0, g = 0, b = 0, a = 0;

    bool operator==(const Rgba&) const = default;
};

/// Interpretation of the packed 32-bit starting colour.
enum class ColourOrder {
    alpha_high, // 0xAARRGGBB — default; observed values carry 0xFF in the high byte
    alpha_low,  // 0xRRGGBBAA — literal reading of "RGBA"
};

enum class Signal { focus_in, normal_frame, focus_out, blink_start, blink_end };

inline bool is_gaze_signal(Signal s) {
    return s == Signal::focus_in || s == Signal::normal_frame || s == Signal::focus_out;
}

struct EyeDirection {
    double eye_x = 0, eye_y = 0, eye_z = 0;

    double norm() const;
    bool operator==(const EyeDirection&) const = default;
};

/// Head position in walk-zone metres plus orientation quaternion.
/// A missing quaternion is stored as identity (0,0,0,1).
struct HeadPose {
    double head_x = 0, head_y = 0, head_z = 0;
    double rot_x = 0, rot_y = 0, rot_z = 0, rot_w = 1;

    bool operator==(const HeadPose&) const = default;
};

struct PlayerPose {
    double player_x = 0, player_y = 0, player_z = 0;

    bool operator==(const PlayerPose&) const = default;
};

struct TelemetryFrame {
    std::int64_t timestamp_ms = 0;
    Signal signal = Signal::normal_frame;
    bool has_brush = false; // gaze signals carry a brush id, blink frames need not
    BrushId brush;
    EyeDirection eye;
    HeadPose head;
    PlayerPose player;
    bool valid = true;

    bool operator==(const TelemetryFrame&) const = default;
};

/// One contiguous interval of attention on a single brushstroke.
struct GazeEvent {
    BrushId brush;
    std::int64_t start_ms = 0;
    std::int64_t end_ms = 0;
    double duration_s = 0; // (end_ms - start_ms) / 1000, exactly
    HeadPose head_at_start;
    EyeDirection eye_at_start;
    bool bridged = false; // merged across a blink
};

enum class Gender { female, male };
enum class AgeGroup { a16_25, a26_35, a36_45, a46_plus };
enum class GameExp { md, od, ow, rl, na };
enum class VrExp { none, some, very };
enum class ArtKnowledge { none, familiar, extensive };

struct ParticipantProfile {
    std::string participant_id;
    Gender gender = Gender::female;
    AgeGroup age_group = AgeGroup::a16_25;
    GameExp game_exp = GameExp::rl;
    VrExp vr_exp = VrExp::none;
    ArtKnowledge art_knowledge = ArtKnowledge::none;

    bool operator==(const ParticipantProfile&) const = default;
};

/// Questionnaire field used as a classification target or grouping key.
enum class ProfileField { gender, age_group, game_exp, vr_exp, art_knowledge };

// --- brushstroke identifier codec -----------------------------------------

/// Parse "brushtype_startingcolour_artworkref_seq".
/// Throws MalformedId on wrong field count, non-numeric colour/seq or empty token.
BrushId parse_brush_id(std::string_view s);

/// Inverse of parse_brush_id. Throws InvalidToken if a token contains '_'.
std::string format_brush_id(const BrushId& id);

/// Unpack the 32-bit starting colour. Total function.
Rgba decode_packed_colour(std::uint32_t packed, ColourOrder order = ColourOrder::alpha_high);

/// Re-pack four channels; inverse of decode_packed_colour for the same order.
std::uint32_t encode_packed_colour(const Rgba& c, ColourOrder order = ColourOrder::alpha_high);

// --- signal and category tokens --------------------------------------------

std::string_view to_token(Signal s);
Signal parse_signal(std::string_view token); // throws ValueError

std::string_view to_token(Gender g);
std::string_view to_token(AgeGroup a);
std::string_view to_token(GameExp g);
std::string_view to_token(VrExp v);
std::string_view to_token(ArtKnowledge a);
std::string_view to_token(ProfileField f);

Gender parse_gender(std::string_view token);             // throws UnknownCategory
AgeGroup parse_age_group(std::string_view token);         // throws UnknownCategory
GameExp parse_game_exp(std::string_view token);           // throws UnknownCategory
VrExp parse_vr_exp(std::string_view token);               // throws UnknownCategory
ArtKnowledge parse_art_knowledge(std::string_view token); // throws UnknownCategory
ProfileField parse_profile_field(std::string_view token); // throws UnknownCategory

/// Number of categories of a questionnaire field (2 for gender, ...).
int category_count(ProfileField f);

/// Category tokens of a field, index-aligned with category_index.
std::vector<std::string> category_names(ProfileField f);

/// 0-based class index of a participant's value for the given field.
int category_index(const ParticipantProfile& p, ProfileField f);

} // namespace gazelens
