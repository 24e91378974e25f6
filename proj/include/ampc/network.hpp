#ifndef AMPC_NETWORK_HPP_
#define AMPC_NETWORK_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "ampc/rng.hpp"

namespace ampc {
namespace net {

enum class MessageTag {
  kDataShare,
  kTripleShare,
  kDiffShare,
  kOpenedValue,
  kResultShare,
};

const char* tag_name(MessageTag tag);

// Client ids are 1..N; the simulated triple dealer sends as id 0.
constexpr int kDealerId = 0;

struct Message {
  int round = 0;
  int sender = 0;
  int receiver = 0;
  MessageTag tag = MessageTag::kDataShare;
  std::uint64_t seq = 0;  // send order within (round, sender)
  std::uint64_t payload_digest = 0;
  // Dropped after delivery unless retain_payloads() is on.
  std::shared_ptr<const std::string> payload;
};

struct CollusionView {
  std::vector<int> colluders;
  // Transcript entries sent or received by a colluder. Channels between two
  // non-colluders are invisible (secure point-to-point channels).
  std::vector<Message> messages;
};

// Synchronous in-process simulation of N honest-but-curious clients.
// Messages staged with send() become visible after deliver_round(), which
// delivers in (sender, receiver, seq) order so that replaying a seed gives a
// byte-identical transcript. run_clients executes one round body per client,
// optionally on the OpenMP pool; bodies may only touch their own client's
// outbox and RNG, which keeps the parallel path deterministic.
class Network {
 public:
  Network(int n_clients, int t_colluders, std::uint64_t seed);

  int n_clients() const { return n_clients_; }
  int t_colluders() const { return t_colluders_; }
  std::uint64_t seed() const { return seed_; }
  int round() const { return round_; }

  // Stage a message from the current round. A message stamped with any
  // other round is a protocol violation (its barrier has passed or not yet
  // opened).
  void send(int sender, int receiver, MessageTag tag, std::string payload);
  void send(Message msg);

  void deliver_round();

  // Messages delivered to `client` in the most recent deliver_round().
  const std::vector<Message>& inbox(int client) const;

  // Runs body(client) for every client id 1..N.
  void run_clients(const std::function<void(int)>& body);

  RngStream& client_rng(int client);
  RngStream& dealer_rng() { return dealer_rng_; }
  RngStream purpose_rng(int client, std::uint64_t purpose) const;

  // Deterministic per-owner secret id allocation (owner 0 = dealer). Only
  // the owner's round body may allocate, so parallel execution stays
  // deterministic.
  std::uint64_t alloc_secret_id(int owner);

  const std::vector<Message>& transcript() const { return transcript_; }

  void set_retain_payloads(bool retain) { retain_payloads_ = retain; }
  bool retain_payloads() const { return retain_payloads_; }

  CollusionView collusion_view(const std::vector<int>& colluders) const;

  // One JSON object per line: {round, sender, receiver, tag, seq,
  // payload_digest, payload?}. Payloads included only when requested and
  // retained.
  void dump_transcript(std::ostream& out, bool with_payloads) const;

 private:
  int n_clients_;
  int t_colluders_;
  std::uint64_t seed_;
  int round_ = 0;
  bool retain_payloads_ = true;

  std::vector<std::vector<Message>> outboxes_;  // staged, by sender (0..N)
  std::vector<std::vector<Message>> inboxes_;   // delivered, by receiver
  std::vector<Message> transcript_;
  std::vector<RngStream> client_rngs_;  // index 0 unused
  RngStream dealer_rng_;
  std::vector<std::uint64_t> next_secret_id_;  // by owner (0..N)
};

std::uint64_t payload_digest(const std::string& payload);

}  // namespace net
}  // namespace ampc

#endif  // AMPC_NETWORK_HPP_
