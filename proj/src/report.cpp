#include "dgkernel/report.hpp"

#include <sstream>

namespace dgk {

Json Report::to_json() const
{
    Json j;
    j["operation"] = operation.empty() ? Json(nullptr) : Json(operation);
    j["inputs"] = inputs;
    j["verdict"] = verdict.empty() ? Json(nullptr) : Json(verdict);
    j["witnesses"] = witnesses;
    j["certificates"] = certificates;
    j["notes"] = notes;
    j["ok"] = ok;
    j["alarm"] = alarm;
    j["timings"] = nullptr;
    return j;
}

std::string Report::to_text() const
{
    std::ostringstream os;
    os << (operation.empty() ? "(report)" : operation) << ": "
       << (verdict.empty() ? "(no verdict)" : verdict);
    if (alarm)
        os << "  [ALARM]";
    else if (!ok)
        os << "  [ERROR]";
    os << "\n";
    if (!inputs.empty())
        os << "  inputs: " << inputs.dump() << "\n";
    if (!witnesses.empty())
        os << "  witnesses: " << witnesses.dump() << "\n";
    if (!certificates.empty())
        os << "  certificates: " << certificates.dump() << "\n";
    for (const auto& n : notes)
        os << "  note: " << n << "\n";
    return os.str();
}

std::string content_hash(const std::string& data)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

} // namespace dgk
