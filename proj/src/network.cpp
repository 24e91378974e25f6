#include "ampc/network.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "ampc/errors.hpp"
#include "ampc/kernels.hpp"

namespace ampc {
namespace net {

const char* tag_name(MessageTag tag) {
  switch (tag) {
    case MessageTag::kDataShare: return "data-share";
    case MessageTag::kTripleShare: return "triple-share";
    case MessageTag::kDiffShare: return "diff-share";
    case MessageTag::kOpenedValue: return "opened-value";
    case MessageTag::kResultShare: return "result-share";
  }
  return "unknown";
}

std::uint64_t payload_digest(const std::string& payload) {
  // FNV-1a; a debugging fingerprint, not a cryptographic hash.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : payload) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

Network::Network(int n_clients, int t_colluders, std::uint64_t seed)
    : n_clients_(n_clients),
      t_colluders_(t_colluders),
      seed_(seed),
      dealer_rng_(seed, kDealerId, rng_purpose::kTripleDealer) {
  if (n_clients < 2)
    throw invalid_argument("network: need at least 2 clients");
  if (t_colluders < 1 || t_colluders >= n_clients)
    throw invalid_argument(
        "network: collusion threshold must satisfy 1 <= T <= N-1");
  outboxes_.resize(n_clients + 1);
  inboxes_.resize(n_clients + 1);
  client_rngs_.reserve(n_clients + 1);
  for (int i = 0; i <= n_clients; ++i)
    client_rngs_.emplace_back(seed, static_cast<std::uint64_t>(i),
                              rng_purpose::kShareNoise);
  next_secret_id_.assign(n_clients + 1, 0);
}

void Network::send(int sender, int receiver, MessageTag tag,
                   std::string payload) {
  Message msg;
  msg.round = round_;
  msg.sender = sender;
  msg.receiver = receiver;
  msg.tag = tag;
  msg.payload_digest = payload_digest(payload);
  msg.payload = std::make_shared<const std::string>(std::move(payload));
  send(std::move(msg));
}

void Network::send(Message msg) {
  if (msg.round != round_) {
    std::ostringstream what;
    what << "send: message stamped for round " << msg.round
         << " but the network is in round " << round_;
    throw Error(ErrorKind::kProtocolViolation, what.str());
  }
  if (msg.sender < 0 || msg.sender > n_clients_ || msg.receiver < 1 ||
      msg.receiver > n_clients_)
    throw invalid_argument("send: sender or receiver id out of range");
  auto& box = outboxes_[msg.sender];
  msg.seq = box.size();
  box.push_back(std::move(msg));
}

void Network::deliver_round() {
  for (auto& inbox : inboxes_) inbox.clear();
  // (sender, receiver, seq) lexicographic delivery.
  for (auto& box : outboxes_) {
    std::stable_sort(box.begin(), box.end(),
                     [](const Message& a, const Message& b) {
                       if (a.receiver != b.receiver)
                         return a.receiver < b.receiver;
                       return a.seq < b.seq;
                     });
  }
  for (auto& box : outboxes_) {
    for (Message& msg : box) {
      inboxes_[msg.receiver].push_back(msg);
      if (!retain_payloads_) msg.payload.reset();
      transcript_.push_back(msg);
    }
    box.clear();
  }
  ++round_;
}

const std::vector<Message>& Network::inbox(int client) const {
  if (client < 1 || client > n_clients_)
    throw invalid_argument("inbox: client id out of range");
  return inboxes_[client];
}

void Network::run_clients(const std::function<void(int)>& body) {
  if (kernels::parallel_enabled()) {
#pragma omp parallel for schedule(static)
    for (int c = 1; c <= n_clients_; ++c) body(c);
  } else {
    for (int c = 1; c <= n_clients_; ++c) body(c);
  }
}

RngStream& Network::client_rng(int client) {
  if (client < 1 || client > n_clients_)
    throw invalid_argument("client_rng: client id out of range");
  return client_rngs_[client];
}

RngStream Network::purpose_rng(int client, std::uint64_t purpose) const {
  return RngStream(seed_, static_cast<std::uint64_t>(client), purpose);
}

std::uint64_t Network::alloc_secret_id(int owner) {
  if (owner < 0 || owner > n_clients_)
    throw invalid_argument("alloc_secret_id: owner out of range");
  // Owner id in the top bits keeps the spaces disjoint.
  return (static_cast<std::uint64_t>(owner) << 48) | next_secret_id_[owner]++;
}

CollusionView Network::collusion_view(const std::vector<int>& colluders) const {
  if (static_cast<int>(colluders.size()) > t_colluders_) {
    std::ostringstream what;
    what << "collusion_view: " << colluders.size()
         << " colluders exceed the threshold T = " << t_colluders_;
    throw invalid_argument(what.str());
  }
  for (int c : colluders)
    if (c < 1 || c > n_clients_)
      throw invalid_argument("collusion_view: client id out of range");

  CollusionView view;
  view.colluders = colluders;
  auto is_colluder = [&](int id) {
    return std::find(colluders.begin(), colluders.end(), id) !=
           colluders.end();
  };
  for (const Message& msg : transcript_)
    if (is_colluder(msg.sender) || is_colluder(msg.receiver))
      view.messages.push_back(msg);
  return view;
}

void Network::dump_transcript(std::ostream& out, bool with_payloads) const {
  for (const Message& msg : transcript_) {
    nlohmann::json j;
    j["round"] = msg.round;
    j["sender"] = msg.sender;
    j["receiver"] = msg.receiver;
    j["tag"] = tag_name(msg.tag);
    j["seq"] = msg.seq;
    j["payload_digest"] = msg.payload_digest;
    if (with_payloads && msg.payload) {
      // Hex keeps the dump line-oriented and bit-exact.
      static const char* hex = "0123456789abcdef";
      std::string enc;
      enc.reserve(msg.payload->size() * 2);
      for (unsigned char c : *msg.payload) {
        enc.push_back(hex[c >> 4]);
        enc.push_back(hex[c & 0xf]);
      }
      j["payload"] = enc;
    }
    out << j.dump() << "\n";
  }
}

}  // namespace net
}  // namespace ampc
