#include "topiclab/synth.hpp"

#include <algorithm>
#include <numeric>

#include "topiclab/error.hpp"
#include "topiclab/rng.hpp"

namespace topiclab {

const std::vector<std::vector<std::string>>& synth_topic_blocks() {
    static const std::vector<std::vector<std::string>> blocks = {
        {"screen", "crack", "glass", "shatter", "scratch", "corner"},
        {"power", "cycling", "cord", "outlet", "surge", "plug"},
        {"remote", "button", "battery", "pair", "respond", "blink"},
        {"sound", "audio", "speaker", "mute", "volume", "buzz"},
        {"wifi", "internet", "router", "network", "signal", "dropout"},
        {"software", "update", "firmware", "version", "usb", "install"},
        {"ticket", "status", "follow", "pending", "escalate", "agent"},
        {"hdmi", "port", "cable", "input", "device", "handshake"},
        {"picture", "flicker", "dark", "dim", "bright", "contrast"},
        {"warranty", "exchange", "replacement", "return", "refund", "claim"},
        {"line", "vertical", "horizontal", "stripe", "band", "pixel"},
        {"channel", "antenna", "tuner", "broadcast", "scan", "reception"},
        {"app", "store", "stream", "download", "launch", "crash"},
        {"menu", "language", "reset", "factory", "option", "default"},
        {"stand", "mount", "wall", "bracket", "screw", "base"},
        {"delivery", "shipment", "track", "box", "damage", "carton"},
        {"bluetooth", "headphone", "soundbar", "sync", "latency", "dongle"},
        {"subtitle", "caption", "overlay", "font", "delay", "encode"},
        {"game", "console", "lag", "refresh", "motion", "blur"},
        {"panel", "backlight", "halo", "uniformity", "edge", "glow"},
        {"burn", "ghost", "image", "retention", "static", "logo"},
        {"dolby", "cinema", "surround", "decoder", "bitstream", "passthrough"},
        {"netflix", "youtube", "hulu", "buffer", "playback", "spinner"},
        {"hotspot", "ethernet", "lan", "modem", "bandwidth", "ping"},
        {"calibration", "color", "hue", "tint", "gamma", "saturation"},
        {"voice", "assistant", "microphone", "command", "wake", "alexa"},
        {"standby", "sleep", "timer", "clock", "schedule", "idle"},
        {"inch", "model", "serial", "sticker", "barcode", "unit"},
        {"technician", "visit", "repair", "appointment", "onsite", "fix"},
        {"invoice", "bill", "payment", "charge", "receipt", "card"},
        {"email", "address", "account", "login", "password", "verification"},
        {"coupon", "discount", "promo", "code", "voucher", "deal"},
        {"manual", "guide", "instruction", "setup", "wizard", "booklet"},
        {"dust", "vent", "fan", "heat", "overheat", "noise"},
        {"child", "lock", "parental", "pin", "restriction", "profile"},
        {"projector", "optic", "lamp", "sharpness", "keystone", "throw"},
        {"airplay", "cast", "mirror", "chromecast", "phone", "tablet"},
        {"ir", "sensor", "blaster", "receiver", "emitter", "beam"},
        {"humidity", "moisture", "condensation", "fog", "mold", "damp"},
        {"electricity", "voltage", "fuse", "breaker", "adapter", "watt"},
    };
    return blocks;
}

int max_synth_topics() {
    return static_cast<int>(synth_topic_blocks().size());
}

std::vector<std::string> synth_corpus_lines(const SynthOptions& opt) {
    if (opt.n_docs < 1) throw Error("n_docs must be >= 1");
    if (opt.n_topics < 1 || opt.n_topics > max_synth_topics()) {
        throw Error("the synthetic generator supports 1 to " +
                    std::to_string(max_synth_topics()) + " topics");
    }
    const auto& blocks = synth_topic_blocks();

    // Connective tissue removed by the default preprocessing, so these never
    // reach the vocabulary.
    static const std::vector<std::string> fillers = {
        "the", "a", "my", "is", "it", "on", "not", "please",
        "customer", "says", "thanks", "again",
    };

    Rng rng(opt.seed);
    std::vector<std::string> lines;
    lines.reserve(static_cast<std::size_t>(opt.n_docs));
    std::vector<int> order;

    for (int d = 0; d < opt.n_docs; ++d) {
        const int topic = static_cast<int>(
            static_cast<long long>(d) * opt.n_topics / opt.n_docs);
        const auto& block = blocks[static_cast<std::size_t>(topic)];
        const int block_size = static_cast<int>(block.size());

        const int max_len = std::min(block_size, 7);
        const int len = std::min(3, max_len) + rng.uniform_int(std::max(1, max_len - 2));

        order.resize(static_cast<std::size_t>(block_size));
        std::iota(order.begin(), order.end(), 0);
        for (int i = 0; i < len; ++i) {  // partial shuffle: sample without replacement
            const int j = i + rng.uniform_int(block_size - i);
            std::swap(order[static_cast<std::size_t>(i)],
                      order[static_cast<std::size_t>(j)]);
        }

        std::vector<std::string> words;
        words.reserve(static_cast<std::size_t>(len) + 3);
        for (int i = 0; i < len; ++i) {
            words.push_back(block[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);
        }
        const int n_fillers = rng.uniform_int(4);  // 0..3
        for (int i = 0; i < n_fillers; ++i) {
            const auto& filler =
                fillers[static_cast<std::size_t>(rng.uniform_int(static_cast<int>(fillers.size())))];
            const int at = rng.uniform_int(static_cast<int>(words.size()) + 1);
            words.insert(words.begin() + at, filler);
        }

        std::string line;
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (i > 0) line += ' ';
            line += words[i];
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

}  // namespace topiclab
