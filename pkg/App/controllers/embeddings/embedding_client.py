import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import product

from App.models import BudgetExceededError
from .Catalog import Catalog
from .words import count_elements, enumerate_component, enumerate_shard, format_element

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10 ** 6


def _shard_keys(component):
    """Enumeration shards of a component: the empty word, then one per first letter."""
    keys = [None]
    for symbol in component.alphabet:
        keys.append((symbol, 1))
        if component.is_group:
            keys.append((symbol, -1))
    return keys


def _enumerate_shard(spec, max_len, shard):
    first, rest = spec.components[0], spec.components[1:]
    tails = list(product(*(list(enumerate_component(c, max_len)) for c in rest)))
    images = []
    for word in enumerate_shard(first, max_len, shard):
        for tail in tails:
            element = (word,) + tail
            images.append((spec.evaluate(element).key(), element))
    return images


def _scan_catalog_shard(name, max_len, shard):
    return _enumerate_shard(Catalog().get(name), max_len, shard)


class EmbeddingClient:
    def __init__(self):
        self.catalog = Catalog()

    def get(self, name):
        return self.catalog.get(name)

    def evaluate(self, name, text):
        spec = self.get(name)
        element = spec.parse(text)
        return element, spec.evaluate(element)

    def injectivity_scan(self, spec, max_len, budget=DEFAULT_BUDGET, workers=1):
        """First pair of distinct elements with equal images, or None."""
        return self.scan(spec, max_len, budget=budget, workers=workers)["collision"]

    def scan(self, spec, max_len, budget=DEFAULT_BUDGET, workers=1):
        if isinstance(spec, str):
            spec = self.get(spec)
        if max_len < 1:
            raise ValueError(f"max_len must be at least 1, got {max_len}")
        count = count_elements(spec.components, max_len)
        if count > budget:
            raise BudgetExceededError(count, budget)

        shards = _shard_keys(spec.components[0])
        if workers > 1 and spec.name in self.catalog.specs:
            logger.debug("Scanning %s in %s shards on %s workers", spec.name, len(shards), workers)
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(
                    _scan_catalog_shard, [spec.name] * len(shards), [max_len] * len(shards), shards
                ))
        else:
            results = [_enumerate_shard(spec, max_len, shard) for shard in shards]

        collision = self._reconcile(spec, results)
        logger.info(
            "%s: %s elements up to length %s, %s",
            spec.name, count, max_len, "collision found" if collision else "no collision",
        )
        return {
            "spec": spec.name,
            "max_len": max_len,
            "elements": count,
            "collision": collision,
        }

    def _reconcile(self, spec, results):
        seen = {}
        for images in results:
            for key, element in images:
                earlier = seen.setdefault(key, element)
                if earlier != element and spec.evaluate(earlier) == spec.evaluate(element):
                    return earlier, element
        return None

    def scan_json(self, spec, max_len, budget=DEFAULT_BUDGET, workers=1):
        result = self.scan(spec, max_len, budget=budget, workers=workers)
        collision = result["collision"]
        if collision is not None:
            result["collision"] = [format_element(element) for element in collision]
        return result


embedding_client = EmbeddingClient()
