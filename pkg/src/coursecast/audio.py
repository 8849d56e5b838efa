"""Minimal MP3 framing support.

Two jobs: emit deterministic silent audio for the hermetic Null TTS backend,
and sanity-check backend output by walking MPEG frame headers (Layer III,
MPEG-1/2/2.5). No decoding happens here; a stream parses if every frame
header is coherent, which is the "decodable" bar the pipeline enforces.
"""

from __future__ import annotations

from dataclasses import dataclass

# One silent MPEG-1 Layer III frame: mono, 44.1 kHz, 32 kbit/s.
# All-zero side info means zero-length Huffman data in both granules, i.e.
# 1152 samples of silence in 104 bytes.
_SILENT_FRAME = bytes([0xFF, 0xFB, 0x10, 0xC0]) + bytes(100)
_SILENT_FRAME_SECONDS = 1152 / 44100

_BITRATES_V1_L3 = (0, 32, 40, 48, 56, 64, 80, 96, 112, 128, 160, 192, 224, 256, 320, 0)
_BITRATES_V2_L3 = (0, 8, 16, 24, 32, 40, 48, 56, 64, 80, 96, 112, 128, 144, 160, 0)
_SAMPLE_RATES = {3: (44100, 48000, 32000), 2: (22050, 24000, 16000), 0: (11025, 12000, 8000)}


def silent_mp3(duration_s: float) -> bytes:
    """Silent MP3 of roughly ``duration_s`` seconds (quantized to whole frames,
    at least one). Identical durations yield identical bytes."""
    frames = max(1, round(duration_s / _SILENT_FRAME_SECONDS))
    return _SILENT_FRAME * frames


@dataclass(frozen=True)
class Mp3Info:
    frames: int
    duration_s: float
    sample_rate: int


def read_mp3_info(data: bytes) -> Mp3Info:
    """Walk every frame of an MP3 stream; raise ValueError if it is not one."""
    if not data:
        raise ValueError("empty audio payload")
    pos = 0
    if data[:3] == b"ID3":
        if len(data) < 10:
            raise ValueError("truncated ID3v2 header")
        size = 0
        for b in data[6:10]:
            if b & 0x80:
                raise ValueError("corrupt ID3v2 size field")
            size = (size << 7) | b
        pos = 10 + size

    frames = 0
    duration = 0.0
    sample_rate = 0
    while pos < len(data):
        if data[pos : pos + 3] == b"TAG" and len(data) - pos == 128:
            break  # ID3v1 trailer
        if len(data) - pos < 4:
            raise ValueError(f"trailing garbage at byte {pos}")
        b0, b1, b2 = data[pos], data[pos + 1], data[pos + 2]
        if b0 != 0xFF or (b1 & 0xE0) != 0xE0:
            raise ValueError(f"no frame sync at byte {pos}")
        version = (b1 >> 3) & 0x3  # 3 = MPEG1, 2 = MPEG2, 0 = MPEG2.5
        layer = (b1 >> 1) & 0x3  # 1 = Layer III
        if version == 1 or layer != 1:
            raise ValueError(f"unsupported MPEG version/layer at byte {pos}")
        bitrate_index = b2 >> 4
        rate_index = (b2 >> 2) & 0x3
        padding = (b2 >> 1) & 0x1
        if bitrate_index in (0, 15) or rate_index == 3:
            raise ValueError(f"invalid bitrate/sample-rate field at byte {pos}")
        if version == 3:
            bitrate = _BITRATES_V1_L3[bitrate_index]
            samples = 1152
            frame_len = (144000 * bitrate) // _SAMPLE_RATES[3][rate_index] + padding
        else:
            bitrate = _BITRATES_V2_L3[bitrate_index]
            samples = 576
            frame_len = (72000 * bitrate) // _SAMPLE_RATES[version][rate_index] + padding
        sample_rate = _SAMPLE_RATES[version][rate_index]
        if pos + frame_len > len(data):
            raise ValueError(f"truncated frame at byte {pos}")
        duration += samples / sample_rate
        frames += 1
        pos += frame_len
    if frames == 0:
        raise ValueError("no MP3 frames found")
    return Mp3Info(frames=frames, duration_s=duration, sample_rate=sample_rate)
