def collect(item, bucket=[]):
    bucket.append(item)
    return bucket
