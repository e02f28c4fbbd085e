#include <hypemb/partitions.hpp>

namespace hypemb {

using std::size_t;
using std::vector;

namespace {
    class BlockPartitioner {
    public:
        BlockPartitioner(const IntVector & target, size_t parts, std::span<const PartBlock> blocks,
            const PartitionVisitor & visit, const PartitionVisitor & accept_prefix) :
            _remaining(target),
            _parts(parts),
            _blocks(blocks.begin(), blocks.end()),
            _visit(visit),
            _accept_prefix(accept_prefix)
        {
            size_t start = 0;
            for (auto & b : _blocks) {
                _block_start.push_back(start);
                start += b.size;
            }
            for (size_t b = 0; b < _blocks.size(); ++b)
                for (size_t c = 0; c < _blocks[b].size; ++c)
                    _block_of.push_back(b);
        }

        auto run() -> bool
        {
            if (_parts == 0 || _block_of.size() != _remaining.size())
                return true;
            for (auto x : _remaining)
                if (x < 0)
                    return true;
            _chosen.clear();
            IntVector floor(_remaining.size(), 0);
            return place(floor);
        }

    private:
        IntVector _remaining;
        size_t _parts;
        vector<PartBlock> _blocks;
        const PartitionVisitor & _visit;
        const PartitionVisitor & _accept_prefix;
        vector<size_t> _block_start, _block_of;
        vector<IntVector> _chosen;
        bool _stopped = false;

        auto block_sum(const IntVector & v, size_t b) const -> std::int64_t
        {
            std::int64_t s = 0;
            for (size_t c = _block_start[b]; c < _block_start[b] + _blocks[b].size; ++c)
                s += v[c];
            return s;
        }

        auto admissible(const IntVector & w) const -> bool
        {
            for (size_t b = 0; b < _blocks.size(); ++b) {
                size_t support = 0;
                for (size_t c = _block_start[b]; c < _block_start[b] + _blocks[b].size; ++c) {
                    if (w[c] > _blocks[b].max_entry)
                        return false;
                    support += (w[c] != 0);
                }
                if (support == 0 || support > _blocks[b].max_support)
                    return false;
            }
            return true;
        }

        // Chooses the next part, which must be lex >= floor.
        auto place(const IntVector & floor) -> bool
        {
            auto left = _parts - _chosen.size();
            if (left == 1) {
                if (_remaining < floor || ! admissible(_remaining))
                    return true;
                _chosen.push_back(_remaining);
                bool go_on = _visit(_chosen);
                _chosen.pop_back();
                return go_on;
            }
            // Every later part needs at least one unit per block.
            for (size_t b = 0; b < _blocks.size(); ++b)
                if (block_sum(_remaining, b) < static_cast<std::int64_t>(left))
                    return true;

            IntVector w(_remaining.size(), 0);
            vector<size_t> support(_blocks.size(), 0);
            choose_coordinate(0, true, floor, w, support, left);
            return ! _stopped;
        }

        void choose_coordinate(size_t c, bool tight, const IntVector & floor, IntVector & w, vector<size_t> & support,
            size_t left)
        {
            if (_stopped)
                return;
            if (c == w.size()) {
                for (size_t b = 0; b < _blocks.size(); ++b)
                    if (support[b] == 0)
                        return;
                // The parts after this one are lex >= w, so what is left must
                // be lex >= (left-1)·w: while the running sums tie, every later
                // part agrees with w on the coordinates seen so far.
                auto later = static_cast<std::int64_t>(left - 1);
                for (size_t i = 0; i < w.size(); ++i) {
                    auto rest = _remaining[i] - w[i];
                    if (rest < later * w[i])
                        return;
                    if (rest > later * w[i])
                        break;
                }
                for (size_t b = 0; b < _blocks.size(); ++b)
                    if (block_sum(_remaining, b) - block_sum(w, b) < static_cast<std::int64_t>(left - 1))
                        return;
                for (size_t i = 0; i < w.size(); ++i)
                    _remaining[i] -= w[i];
                _chosen.push_back(w);
                if ((! _accept_prefix || _accept_prefix(_chosen)) && ! place(w))
                    _stopped = true;
                _chosen.pop_back();
                for (size_t i = 0; i < w.size(); ++i)
                    _remaining[i] += w[i];
                return;
            }

            auto b = _block_of[c];
            auto hi = std::min(_remaining[c], _blocks[b].max_entry);
            auto lo = tight ? floor[c] : std::int64_t{0};
            for (auto x = lo; x <= hi && ! _stopped; ++x) {
                if (x != 0 && support[b] == _blocks[b].max_support)
                    break;
                w[c] = x;
                support[b] += (x != 0);
                choose_coordinate(c + 1, tight && x == floor[c], floor, w, support, left);
                support[b] -= (x != 0);
            }
            w[c] = 0;
        }
    };
}

auto enumerate_block_partitions(const IntVector & target, size_t parts, std::span<const PartBlock> blocks,
    const PartitionVisitor & visit, const PartitionVisitor & accept_prefix) -> bool
{
    BlockPartitioner p(target, parts, blocks, visit, accept_prefix);
    return p.run();
}

auto enumerate_vector_partitions(const IntVector & target, size_t parts, size_t max_support,
    const PartitionVisitor & visit) -> bool
{
    PartBlock block{target.size(), max_support};
    return enumerate_block_partitions(target, parts, std::span<const PartBlock>(&block, 1), visit);
}

auto collect_vector_partitions(const IntVector & target, size_t parts, size_t max_support)
    -> vector<vector<IntVector>>
{
    vector<vector<IntVector>> out;
    enumerate_vector_partitions(target, parts, max_support, [&](std::span<const IntVector> p) {
        out.emplace_back(p.begin(), p.end());
        return true;
    });
    return out;
}

}  // namespace hypemb
